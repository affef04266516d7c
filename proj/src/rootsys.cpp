#include "rootlet/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace rootlet {

// ===========================================================================
// Cartan types
// ===========================================================================

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad type '" + s + "': expected a family letter followed by a rank");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (f < 'A' || f > 'G') throw std::invalid_argument("bad type '" + s + "': family must be one of A..G");
  int rank = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad type '" + s + "': rank must be numeric");
    rank = rank * 10 + (s[i] - '0');
    if (rank > 1000) throw std::invalid_argument("bad type '" + s + "': rank out of range");
  }
  CartanType t{static_cast<Family>(f), rank};
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw std::invalid_argument("bad type '" + s + "': rank outside the family's bounds");
  return t;
}

std::string CartanType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

std::vector<CartanType> all_types_up_to_rank8() {
  std::vector<CartanType> out;
  for (int n = 1; n <= 8; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= 8; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= 8; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= 8; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) out.push_back({Family::E, n});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

int classical_positive_count(CartanType t) {
  int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  throw std::logic_error("unreachable");
}

// ===========================================================================
// RootSet
// ===========================================================================

std::vector<int> RootSet::indices() const {
  std::vector<int> out;
  for (int word = 0; word < 2; ++word) {
    std::uint64_t x = w[word];
    while (x) {
      int b = std::countr_zero(x);
      out.push_back(word * 64 + b);
      x &= x - 1;
    }
  }
  return out;
}

RootSet RootSet::of(const std::vector<int>& idx) {
  RootSet s;
  for (int i : idx) s.set(i);
  return s;
}

RootSet RootSet::full(int n) {
  RootSet s;
  for (int i = 0; i < n; ++i) s.set(i);
  return s;
}

Numbering numbering_parse(const std::string& s) {
  if (s == "paper") return Numbering::paper;
  if (s == "bourbaki") return Numbering::bourbaki;
  throw std::invalid_argument("bad numbering '" + s + "': expected paper|bourbaki");
}

// ===========================================================================
// Construction
// ===========================================================================

namespace {

// Cartan matrix c[i][j] = <alpha_i, alpha_j^vee> and the symmetrizer d[i] =
// (alpha_i, alpha_i)/2, in Bourbaki numbering, normalized so that long roots
// have squared length 2.
void cartan_data(CartanType t, std::vector<std::vector<int>>& c, std::vector<Rat>& d) {
  int n = t.rank;
  c.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  d.assign(n, Rat(1));
  auto chain_edge = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      break;
    case Family::B:  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      c[n - 2][n - 1] = -2;
      d[n - 1] = Rat(1, 2);
      break;
    case Family::C:  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      c[n - 1][n - 2] = -2;
      for (int i = 0; i + 1 < n; ++i) d[i] = Rat(1, 2);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) chain_edge(i, i + 1);
      chain_edge(n - 3, n - 1);
      break;
    case Family::E:
      // nodes 1,3,4,...,n in a chain; node 2 hangs off node 4
      chain_edge(0, 2);
      for (int i = 2; i + 1 < n; ++i) chain_edge(i, i + 1);
      chain_edge(1, 3);
      break;
    case Family::F:  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      chain_edge(0, 1);
      chain_edge(2, 3);
      c[1][2] = -2;
      c[2][1] = -1;
      d[2] = d[3] = Rat(1, 2);
      break;
    case Family::G:  // alpha_1 short, alpha_2 long
      c[0][1] = -1;
      c[1][0] = -3;
      d[0] = Rat(1, 3);
      break;
  }
}

// Finds the unique relabeling of the E8 diagram as a chain 1-2-...-7 with node
// 8 attached to node 5, under which the highest root reads 23456423.  Returns
// perm[display] = internal node.
std::vector<int> e8_display_permutation(const std::vector<std::vector<int>>& adj, const Root& theta) {
  const std::vector<std::pair<int, int>> tgt_edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
  const std::vector<int> tgt_theta = {2, 3, 4, 5, 6, 4, 2, 3};
  std::vector<std::vector<char>> is_edge(8, std::vector<char>(8, 0));
  for (int i = 0; i < 8; ++i)
    for (int j : adj[i]) is_edge[i][j] = 1;

  std::vector<int> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> found;
  do {
    bool ok = true;
    for (int i = 0; i < 8 && ok; ++i) ok = theta[perm[i]] == tgt_theta[i];
    for (auto [a, b] : tgt_edges) {
      if (!ok) break;
      ok = is_edge[perm[a]][perm[b]];
    }
    if (ok) found.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (found.size() != 1)
    throw std::logic_error("E8 display numbering is not pinned down uniquely (" +
                           std::to_string(found.size()) + " candidate relabelings)");
  return found[0];
}

}  // namespace

RootSystem RootSystem::build(CartanType t) {
  RootSystem rs;
  rs.type = t;
  rs.rank = t.rank;
  int n = t.rank;
  cartan_data(t, rs.cartan, rs.d);

  // (alpha_i, alpha_j) = c[i][j] * d[j]; check the symmetrizer is consistent.
  rs.bilin.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rs.bilin[i][j] = Rat(rs.cartan[i][j]) * rs.d[j];
      if (j < i && rs.bilin[i][j] != Rat(rs.cartan[j][i]) * rs.d[i])
        throw std::logic_error("Cartan matrix is not symmetrizable as entered");
    }

  rs.adj.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rs.cartan[i][j] != 0) rs.adj[i].push_back(j);

  // Closure of the simple roots under root strings, level by level in height.
  std::map<Root, int> seen;
  std::vector<Root> level;
  for (int i = 0; i < n; ++i) {
    Root a(n, 0);
    a[i] = 1;
    level.push_back(a);
    seen[a] = 1;
  }
  auto pairing_of = [&](const Root& g, int i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += g[j] * rs.cartan[j][i];
    return s;
  };
  while (!level.empty()) {
    std::vector<Root> next;
    for (const Root& g : level) {
      for (int i = 0; i < n; ++i) {
        Root down = g;
        int p = 0;  // length of the descending alpha_i-string through g
        while (true) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        if (p - pairing_of(g, i) >= 1) {
          Root up = g;
          up[i] += 1;
          if (seen.emplace(up, 0).second) next.push_back(up);
        }
      }
    }
    level = std::move(next);
  }

  rs.positive.clear();
  for (const auto& kv : seen) rs.positive.push_back(kv.first);
  if (static_cast<int>(rs.positive.size()) != classical_positive_count(t))
    throw std::logic_error(t.name() + ": closure produced " + std::to_string(rs.positive.size()) +
                           " positive roots, expected " + std::to_string(classical_positive_count(t)));
  if (rs.positive.size() > 128)
    throw std::invalid_argument(t.name() + " has more than 128 positive roots; not supported by this build");

  std::sort(rs.positive.begin(), rs.positive.end(), [&](const Root& a, const Root& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (int i = 0; i < static_cast<int>(rs.positive.size()); ++i) rs.index_of[rs.positive[i]] = i;

  int np = static_cast<int>(rs.positive.size());
  rs.sum_idx.assign(np, std::vector<int16_t>(np, -1));
  for (int i = 0; i < np; ++i)
    for (int j = i; j < np; ++j) {
      Root s(n);
      for (int k = 0; k < n; ++k) s[k] = rs.positive[i][k] + rs.positive[j][k];
      auto it = rs.index_of.find(s);
      if (it != rs.index_of.end()) rs.sum_idx[i][j] = rs.sum_idx[j][i] = static_cast<int16_t>(it->second);
    }

  // Highest root: the last root in height order must dominate everything.
  rs.theta = rs.positive.back();
  rs.theta_idx = np - 1;
  for (const Root& g : rs.positive)
    if (!rs.root_leq(g, rs.theta)) throw std::logic_error("highest root is not the unique maximum");

  rs.rho.assign(n, Rat(0));
  for (const Root& g : rs.positive)
    for (int k = 0; k < n; ++k) rs.rho[k] += Rat(g[k], 2);

  rs.is_long.assign(np, 0);
  rs.in_h.assign(np, 0);
  for (int i = 0; i < np; ++i) {
    rs.is_long[i] = rs.bilinear(rs.positive[i], rs.positive[i]) == Rat(2);
    rs.in_h[i] = rs.bilinear(rs.positive[i], rs.theta) != Rat(0);
    if (rs.is_long[i]) rs.long_pos.push_back(i);
    if (rs.in_h[i]) rs.h_set.push_back(i);
  }
  if (!rs.is_long[rs.theta_idx]) throw std::logic_error("highest root is not long");

  rs.simple_pos_idx.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    rs.simple_pos_idx[i] = rs.index_of.at(rs.simple(i));
    if (rs.d[i] == Rat(1)) rs.simple_long.push_back(i);
  }

  rs.paper_to_internal.resize(n);
  std::iota(rs.paper_to_internal.begin(), rs.paper_to_internal.end(), 0);
  if (t.family == Family::E && t.rank == 8)
    rs.paper_to_internal = e8_display_permutation(rs.adj, rs.theta);

  return rs;
}

// ===========================================================================
// Bilinear form
// ===========================================================================

Rat RootSystem::bilinear(const RatVec& x, const RatVec& y) const {
  Rat s(0);
  for (int i = 0; i < rank; ++i) {
    if (x[i] == Rat(0)) continue;
    for (int j = 0; j < rank; ++j) s += x[i] * bilin[i][j] * y[j];
  }
  return s;
}

Rat RootSystem::bilinear(const Root& x, const Root& y) const {
  Rat s(0);
  for (int i = 0; i < rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank; ++j)
      if (y[j] != 0) s += Rat(x[i] * y[j]) * bilin[i][j];
  }
  return s;
}

Rat RootSystem::bilinear(const Root& x, const RatVec& y) const {
  Rat s(0);
  for (int i = 0; i < rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank; ++j) s += Rat(x[i]) * bilin[i][j] * y[j];
  }
  return s;
}

int RootSystem::pairing(const Root& x, int i) const {
  int s = 0;
  for (int j = 0; j < rank; ++j) s += x[j] * cartan[j][i];
  return s;
}

Root RootSystem::coroot(const Root& g) const {
  Rat len = bilinear(g, g);
  if (len == Rat(0)) throw std::invalid_argument("coroot of the zero vector");
  Root out(rank);
  for (int i = 0; i < rank; ++i) out[i] = static_cast<int>(as_integer(Rat(2 * g[i]) / len));
  return out;
}

// ===========================================================================
// Membership and order
// ===========================================================================

int RootSystem::index_if_positive(const Root& g) const {
  auto it = index_of.find(g);
  return it == index_of.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Root& g) const {
  if (is_positive_root(g)) return true;
  Root neg(rank);
  for (int i = 0; i < rank; ++i) neg[i] = -g[i];
  return is_positive_root(neg);
}

bool RootSystem::root_leq(const Root& mu, const Root& nu) const {
  for (int i = 0; i < rank; ++i)
    if (nu[i] < mu[i]) return false;
  return true;
}

bool RootSystem::root_leq(int mu, int nu) const { return root_leq(positive[mu], positive[nu]); }

int RootSystem::height(const Root& g) const { return std::accumulate(g.begin(), g.end(), 0); }

// ===========================================================================
// Derived operations
// ===========================================================================

Root RootSystem::half_floor(const Root& g) const {
  Root out(rank);
  for (int i = 0; i < rank; ++i) {
    if (g[i] < 0) throw std::invalid_argument("half_floor expects a nonnegative vector");
    out[i] = g[i] / 2;
  }
  return out;
}

RootSet RootSystem::principal_upper(int idx) const {
  RootSet s;
  for (int j = 0; j < static_cast<int>(positive.size()); ++j)
    if (root_leq(idx, j)) s.set(j);
  return s;
}

std::vector<int> RootSystem::support(const Root& g) const {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i)
    if (g[i] != 0) out.push_back(i);
  return out;
}

bool RootSystem::connected(const std::vector<int>& nodes) const {
  if (nodes.empty()) return true;
  std::vector<char> in(rank, 0), vis(rank, 0);
  for (int i : nodes) in[i] = 1;
  std::deque<int> q{nodes[0]};
  vis[nodes[0]] = 1;
  int reached = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    ++reached;
    for (int v : adj[u])
      if (in[v] && !vis[v]) {
        vis[v] = 1;
        q.push_back(v);
      }
  }
  return reached == static_cast<int>(nodes.size());
}

Root RootSystem::simple(int i) const {
  if (i < 0 || i >= rank) throw std::invalid_argument("simple root index out of range");
  Root a(rank, 0);
  a[i] = 1;
  return a;
}

Root RootSystem::pi_l_sum() const {
  Root s(rank, 0);
  for (int i : simple_long) s[i] = 1;
  return s;
}

RootSet RootSystem::upper_closure(const RootSet& s) const {
  RootSet out = s;
  for (int i : s.indices()) out = out | principal_upper(i);
  return out;
}

bool RootSystem::upper_closed(const RootSet& s) const { return upper_closure(s) == s; }

bool RootSystem::abelian(const RootSet& s) const {
  auto idx = s.indices();
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a; b < idx.size(); ++b)
      if (sum_idx[idx[a]][idx[b]] >= 0) return false;
  return true;
}

// ===========================================================================
// Numbering adapter
// ===========================================================================

std::vector<int> RootSystem::display_coeffs(const Root& g, Numbering nb) const {
  if (nb == Numbering::bourbaki) return g;
  std::vector<int> out(rank);
  for (int i = 0; i < rank; ++i) out[i] = g[paper_to_internal[i]];
  return out;
}

Root RootSystem::from_display(const std::vector<int>& c, Numbering nb) const {
  if (static_cast<int>(c.size()) != rank)
    throw std::invalid_argument("expected " + std::to_string(rank) + " coefficients, got " + std::to_string(c.size()));
  if (nb == Numbering::bourbaki) return c;
  Root g(rank);
  for (int i = 0; i < rank; ++i) g[paper_to_internal[i]] = c[i];
  return g;
}

std::string RootSystem::digit_string(const Root& g, Numbering nb) const {
  std::string s;
  for (int c : display_coeffs(g, nb)) {
    if (c < 0 || c > 9) throw std::logic_error("digit_string needs single-digit coefficients");
    s += static_cast<char>('0' + c);
  }
  return s;
}

std::string RootSystem::coeff_string(const Root& g, Numbering nb) const {
  std::string s;
  auto c = display_coeffs(g, nb);
  for (int i = 0; i < rank; ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

std::string RootSystem::pretty(const Root& g, Numbering nb) const {
  if (g == theta) return "θ";
  auto c = display_coeffs(g, nb);
  int nz = 0, where = -1;
  for (int i = 0; i < rank; ++i)
    if (c[i] != 0) {
      ++nz;
      where = i;
    }
  if (nz == 1 && c[where] == 1) return "α" + std::to_string(where + 1);
  return coeff_string(g, nb);
}

}  // namespace rootlet
