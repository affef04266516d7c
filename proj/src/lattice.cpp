#include "rootlet/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace rootlet {

namespace {

void require_positive(const RootSystem& rs, const Root& g, const char* what) {
  if (!rs.is_positive_root(g))
    throw std::invalid_argument(std::string(what) + " is not a positive root in " +
                                rs.type.name());
}

// Unique tree path between two disjoint connected node sets; returns the
// interior nodes (those in neither set).
std::vector<int> connecting_nodes(const RootSystem& rs, const std::vector<int>& from,
                                  const std::vector<int>& to) {
  std::vector<int> parent(rs.rank, -2);
  std::deque<int> queue;
  for (int v : from) {
    parent[v] = -1;
    queue.push_back(v);
  }
  std::set<int> goal(to.begin(), to.end());
  int hit = -1;
  while (!queue.empty() && hit < 0) {
    int v = queue.front();
    queue.pop_front();
    for (int u : rs.adj[v]) {
      if (parent[u] != -2) continue;
      parent[u] = v;
      if (goal.count(u)) {
        hit = u;
        break;
      }
      queue.push_back(u);
    }
  }
  if (hit < 0) throw std::logic_error("disconnected Dynkin diagram");
  std::set<int> src(from.begin(), from.end());
  std::vector<int> interior;
  for (int v = parent[hit]; v >= 0 && !src.count(v); v = parent[v]) interior.push_back(v);
  std::sort(interior.begin(), interior.end());
  return interior;
}

}  // namespace

JoinResult join(const RootSystem& rs, const Root& eta, const Root& beta) {
  require_positive(rs, eta, "eta");
  require_positive(rs, beta, "beta");
  if (rs.root_leq(eta, beta)) return {beta, JoinMode::comparable, std::nullopt};
  if (rs.root_leq(beta, eta)) return {eta, JoinMode::comparable, std::nullopt};

  std::vector<int> se = rs.support(eta), sb = rs.support(beta);
  std::vector<int> u;
  std::set_union(se.begin(), se.end(), sb.begin(), sb.end(), std::back_inserter(u));

  if (rs.connected(u)) {
    Root value(rs.rank);
    for (int j = 0; j < rs.rank; ++j) value[j] = std::max(eta[j], beta[j]);
    if (!rs.is_positive_root(value))
      throw std::logic_error("coordinate maximum is not a root in " + rs.type.name());
    return {value, JoinMode::overlap_max, std::nullopt};
  }

  std::vector<int> overlap;
  std::set_intersection(se.begin(), se.end(), sb.begin(), sb.end(), std::back_inserter(overlap));
  if (!overlap.empty())
    throw std::logic_error("overlapping supports with a disconnected union in " + rs.type.name());

  std::vector<int> interior = connecting_nodes(rs, se, sb);
  if (interior.empty()) throw std::logic_error("disconnected union without a connecting chain");
  Root bridge(rs.rank, 0);
  for (int v : interior) bridge[v] = 1;
  Root value(rs.rank);
  for (int j = 0; j < rs.rank; ++j) value[j] = eta[j] + beta[j] + bridge[j];
  if (!rs.is_positive_root(value))
    throw std::logic_error("bridged sum is not a root in " + rs.type.name());
  return {value, JoinMode::disjoint_bridge, bridge};
}

Root join_oracle(const RootSystem& rs, const Root& eta, const Root& beta) {
  require_positive(rs, eta, "eta");
  require_positive(rs, beta, "beta");
  std::vector<int> upper;
  for (int i = 0; i < static_cast<int>(rs.positive.size()); ++i) {
    const Root& g = rs.positive[i];
    if (rs.root_leq(eta, g) && rs.root_leq(beta, g)) upper.push_back(i);
  }
  // canonical order is by height, so the first upper bound is minimal; it is
  // the least upper bound iff it sits below every other one
  for (int i : upper)
    if (!rs.root_leq(upper.front(), i))
      throw std::logic_error("no least upper bound in " + rs.type.name());
  return rs.positive[upper.front()];
}

Root join_many(const RootSystem& rs, const std::vector<Root>& roots) {
  if (roots.empty()) throw std::invalid_argument("join of an empty list");
  Root acc = roots[0];
  require_positive(rs, acc, "root");
  for (std::size_t i = 1; i < roots.size(); ++i) acc = join(rs, acc, roots[i]).value;
  return acc;
}

RootSet commutative_roots(const RootSystem& rs, const Atlas& atlas) {
  RootSet via_ideals;
  for (int a : rs.simple_long)
    via_ideals = via_ideals | atlas.mu_max(rs, rs.simple_pos_idx[a]).roots;

  RootSet via_upper;
  for (int i = 0; i < static_cast<int>(rs.positive.size()); ++i)
    if (rs.abelian(rs.principal_upper(i))) via_upper.set(i);

  if (!(via_ideals == via_upper))
    throw std::logic_error("commutative-root routes disagree in " + rs.type.name());
  return via_ideals;
}

DeltaSlice delta_slice(const RootSystem& rs, int alpha, int i) {
  if (alpha < 0 || alpha >= rs.rank) throw std::invalid_argument("simple-root index out of range");
  if (i < 1) throw std::invalid_argument("slice coefficient must be positive");
  DeltaSlice slice;
  slice.alpha = alpha;
  slice.coeff = i;
  for (int idx = 0; idx < static_cast<int>(rs.positive.size()); ++idx)
    if (rs.positive[idx][alpha] == i) slice.members.push_back(idx);
  if (slice.members.empty()) return slice;

  for (int idx : slice.members) {
    bool is_min = true, is_max = true;
    for (int other : slice.members) {
      if (!rs.root_leq(idx, other)) is_min = false;
      if (!rs.root_leq(other, idx)) is_max = false;
    }
    if (is_min) {
      if (slice.min_idx >= 0) throw std::logic_error("two slice minima in " + rs.type.name());
      slice.min_idx = idx;
    }
    if (is_max) {
      if (slice.max_idx >= 0) throw std::logic_error("two slice maxima in " + rs.type.name());
      slice.max_idx = idx;
    }
  }
  if (slice.min_idx < 0 || slice.max_idx < 0)
    throw std::logic_error("slice without a least/greatest root in " + rs.type.name());

  for (int a : slice.members) {
    for (int b : slice.members) {
      Root j = join(rs, rs.positive[a], rs.positive[b]).value;
      if (std::find(slice.members.begin(), slice.members.end(), rs.index_if_positive(j)) ==
          slice.members.end()) {
        slice.join_closed = false;
        return slice;
      }
    }
  }
  return slice;
}

}  // namespace rootlet
