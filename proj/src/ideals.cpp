#include "rootlet/ideals.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace rootlet {

namespace {

std::string root_str(const RootSystem& rs, const Root& g) {
  return rs.type.name() + " " + rs.coeff_string(g, Numbering::bourbaki);
}

// Orders ideals by size, then lexicographically on the sorted index list.
bool canonical_less(const RootSet& a, const RootSet& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.indices() < b.indices();
}

// The fresh inversion of s_i * w is w^{-1}(alpha_i); for a minuscule product it
// must equal delta - gamma with gamma a fresh positive root.  Returns the index
// of gamma, or -1 when the product leaves the minuscule set.
int fresh_ideal_root(const RootSystem& rs, const AffineElt& w_inv, int i) {
  Root x;
  int xdelta = 0;
  if (i == 0) {
    x = rs.theta;
    for (int& c : x) c = -c;
    xdelta = 1;
  } else {
    x = rs.simple(i - 1);
  }
  auto [f, k] = act_lattice(rs, w_inv, x, xdelta);
  if (k != 1) return -1;
  for (int& c : f) c = -c;
  return rs.index_if_positive(f);
}

}  // namespace

const Fiber& Atlas::fiber(const RootSystem& rs, int mu_idx) const {
  auto it = fiber_pos.find(mu_idx);
  if (it == fiber_pos.end())
    throw std::invalid_argument("no fiber over " + root_str(rs, rs.positive.at(mu_idx)));
  return fibers[it->second];
}

const AbelianIdeal& Atlas::mu_min(const RootSystem& rs, int mu_idx) const {
  return ideals[fiber(rs, mu_idx).min_id];
}

const AbelianIdeal& Atlas::mu_max(const RootSystem& rs, int mu_idx) const {
  return ideals[fiber(rs, mu_idx).max_id];
}

int Atlas::id_for(const RootSet& s) const {
  auto it = id_of.find(s);
  return it == id_of.end() ? -1 : it->second;
}

Atlas enumerate_ideals(const RootSystem& rs) {
  std::map<RootSet, AffineElt> states;
  std::deque<RootSet> queue;
  states.emplace(RootSet{}, affine_identity(rs));
  queue.push_back(RootSet{});

  while (!queue.empty()) {
    RootSet cur = queue.front();
    queue.pop_front();
    const AffineElt w = states.at(cur);
    const AffineElt w_inv = inverse(rs, w);
    for (int i = 0; i <= rs.rank; ++i) {
      int g = fresh_ideal_root(rs, w_inv, i);
      if (g < 0) continue;
      if (cur.test(g))
        throw std::logic_error("repeated inversion root in " + rs.type.name());
      RootSet next = cur;
      next.set(g);
      AffineElt w2 = compose(rs, simple_reflection(rs, i), w);
      auto [it, inserted] = states.emplace(next, w2);
      if (inserted) {
        queue.push_back(next);
      } else if (!it->second.same_as(w2)) {
        throw std::logic_error("two distinct elements reach one ideal in " + rs.type.name());
      }
    }
  }

  if (states.size() != (std::size_t(1) << rs.rank))
    throw std::logic_error("ideal count mismatch in " + rs.type.name());

  std::vector<std::pair<RootSet, AffineElt>> flat(states.begin(), states.end());
  std::sort(flat.begin(), flat.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });

  Atlas atlas;
  for (auto& [roots, w] : flat) {
    if (!rs.upper_closed(roots) || !rs.abelian(roots))
      throw std::logic_error("non-ideal state in " + rs.type.name());
    AbelianIdeal ideal{roots, w, std::nullopt, z_of(rs, w)};
    if (!in_coroot_lattice(rs, ideal.z))
      throw std::logic_error("z outside the coroot lattice in " + rs.type.name());
    if (!roots.empty()) {
      Root mu = rootlet_of(rs, w);
      ideal.rootlet_idx = rs.index_if_positive(mu);
    }
    int id = static_cast<int>(atlas.ideals.size());
    atlas.id_of.emplace(roots, id);
    atlas.ideals.push_back(std::move(ideal));
  }
  if (!atlas.ideals[0].roots.empty())
    throw std::logic_error("zero ideal not first in " + rs.type.name());
  atlas.empty_id = 0;

  std::map<int, std::vector<int>> by_mu;
  for (int id = 0; id < static_cast<int>(atlas.ideals.size()); ++id) {
    const auto& ideal = atlas.ideals[id];
    if (ideal.rootlet_idx) by_mu[*ideal.rootlet_idx].push_back(id);
  }
  for (auto& [mu_idx, members] : by_mu) {
    Fiber f;
    f.mu_idx = mu_idx;
    f.members = members;
    for (int id : members) {
      const RootSet& s = atlas.ideals[id].roots;
      bool is_min = true, is_max = true;
      for (int other : members) {
        if (!s.subset_of(atlas.ideals[other].roots)) is_min = false;
        if (!atlas.ideals[other].roots.subset_of(s)) is_max = false;
      }
      if (is_min) {
        if (f.min_id >= 0) throw std::logic_error("two least fiber members in " + rs.type.name());
        f.min_id = id;
      }
      if (is_max) {
        if (f.max_id >= 0) throw std::logic_error("two greatest fiber members in " + rs.type.name());
        f.max_id = id;
      }
    }
    if (f.min_id < 0 || f.max_id < 0)
      throw std::logic_error("fiber without least/greatest member in " + rs.type.name());
    atlas.fiber_pos.emplace(mu_idx, static_cast<int>(atlas.fibers.size()));
    atlas.fibers.push_back(std::move(f));
  }

  for (int id = 1; id < static_cast<int>(atlas.ideals.size()); ++id) {
    bool maximal = true;
    for (int other = 1; other < static_cast<int>(atlas.ideals.size()); ++other) {
      if (other != id && atlas.ideals[id].roots.subset_of(atlas.ideals[other].roots)) {
        maximal = false;
        break;
      }
    }
    if (maximal) atlas.maximal.push_back(id);
  }
  return atlas;
}

std::vector<RootSet> brute_force_enumerate(const RootSystem& rs) {
  const int m = static_cast<int>(rs.positive.size());
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ha = rs.height(rs.positive[a]), hb = rs.height(rs.positive[b]);
    if (ha != hb) return ha > hb;
    return a > b;
  });

  std::vector<RootSet> out;
  RootSet cur;
  // Descending height guarantees every root above the candidate was already
  // decided, so inclusion only needs to look backwards.
  auto rec = [&](auto&& self, int t) -> void {
    if (t == m) {
      out.push_back(cur);
      return;
    }
    int g = order[t];
    bool ok = true;
    for (int j : cur.indices()) {
      if (rs.sum_idx[g][j] >= 0) {
        ok = false;
        break;
      }
    }
    if (ok && rs.sum_idx[g][g] >= 0) ok = false;
    if (ok) {
      for (int s = 0; s < t; ++s) {
        int above = order[s];
        if (!cur.test(above) && rs.root_leq(g, above)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      cur.set(g);
      self(self, t + 1);
      cur.reset(g);
    }
    self(self, t + 1);
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Root rootlet_of(const RootSystem& rs, const AffineElt& w) {
  Root x = rs.theta;
  for (int& c : x) c = -c;
  auto [f, k] = act_lattice(rs, w, x, 2);
  if (k != 0) throw std::logic_error("rootlet off the finite level in " + rs.type.name());
  int idx = rs.index_if_positive(f);
  if (idx < 0 || !rs.is_long[idx])
    throw std::logic_error("rootlet not a long positive root in " + rs.type.name());
  return f;
}

int rootlet(const RootSystem& rs, const AbelianIdeal& I) {
  if (I.roots.empty()) throw std::invalid_argument("the zero ideal has no rootlet");
  if (!I.rootlet_idx) return rs.index_if_positive(rootlet_of(rs, I.w));
  return *I.rootlet_idx;
}

Root z_of_ideal(const RootSystem& rs, const AbelianIdeal& I) { return z_of(rs, I.w); }

namespace {

// Inverse of the Gram matrix of the simple roots, by Gauss-Jordan elimination.
std::vector<RatVec> gram_inverse(const RootSystem& rs) {
  const int n = rs.rank;
  std::vector<RatVec> m(n, RatVec(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = rs.bilin[i][j];
    m[i][n + i] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (m[row][col] != Rat(0)) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) throw std::logic_error("singular Gram matrix");
    std::swap(m[col], m[pivot]);
    Rat inv = Rat(1) / m[col][col];
    for (auto& v : m[col]) v *= inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == Rat(0)) continue;
      Rat f = m[row][col];
      for (int j = 0; j < 2 * n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  std::vector<RatVec> inv(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace

std::vector<Root> z1_enumerate(const RootSystem& rs) {
  const int n = rs.rank;
  const auto inv = gram_inverse(rs);
  std::vector<Root> out;
  std::vector<int> k(n, -1);  // k[i] = (z, alpha_i), each in [-1, 2]
  for (;;) {
    bool feasible = true;
    for (const Root& g : rs.positive) {
      long long s = 0;
      for (int i = 0; i < n; ++i) s += static_cast<long long>(g[i]) * k[i];
      if (s < -1 || s > 2) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      RatVec z(n, Rat(0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) z[i] += inv[i][j] * Rat(k[j]);
      bool integral = true;
      for (const Rat& v : z)
        if (!is_integer(v)) {
          integral = false;
          break;
        }
      if (integral) {
        Root zi(n);
        for (int i = 0; i < n; ++i) zi[i] = static_cast<int>(as_integer(z[i]));
        if (in_coroot_lattice(rs, zi)) out.push_back(zi);
      }
    }
    int pos = n - 1;
    while (pos >= 0 && k[pos] == 2) {
      k[pos] = -1;
      --pos;
    }
    if (pos < 0) break;
    ++k[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long corho_level(const RootSystem& rs, const Root& mu) {
  return as_integer(rs.bilinear(rs.coroot(mu), rs.rho));
}

AffineElt v_mu(const RootSystem& rs, const Root& mu) {
  int idx = rs.index_if_positive(mu);
  if (idx < 0 || !rs.is_long[idx])
    throw std::invalid_argument("not a long positive root: " + root_str(rs, mu));
  std::vector<int> word;
  Root cur = mu;
  while (cur != rs.theta) {
    int step = -1;
    for (int i = 0; i < rs.rank; ++i) {
      if (rs.bilinear(rs.simple(i), cur) < Rat(0)) {
        step = i;
        break;
      }
    }
    if (step < 0) throw std::logic_error("ascent stalled below theta at " + root_str(rs, cur));
    cur[step] -= rs.pairing(cur, step);  // s_step(cur)
    word.push_back(step + 1);
  }
  AffineElt v = from_word(rs, word);
  if (v.v.apply(rs.theta) != mu) throw std::logic_error("v_mu misses mu at " + root_str(rs, mu));
  if (static_cast<long long>(word.size()) != corho_level(rs, rs.theta) - corho_level(rs, mu))
    throw std::logic_error("v_mu length off at " + root_str(rs, mu));
  return v;
}

AbelianIdeal extend(const RootSystem& rs, const AbelianIdeal& I, int alpha) {
  if (I.roots.empty()) throw std::invalid_argument("extend needs a nonzero ideal");
  if (alpha < 0 || alpha >= rs.rank) throw std::invalid_argument("simple-root index out of range");
  Root mu = rs.positive[rootlet(rs, I)];
  if (rs.height(mu) < 2)
    throw std::invalid_argument("rootlet " + root_str(rs, mu) + " is simple; nothing below it");
  if (rs.bilinear(rs.simple(alpha), mu) <= Rat(0))
    throw std::invalid_argument("(alpha, rootlet) must be positive");

  const AffineElt w_inv = inverse(rs, I.w);
  auto [f, k] = act_lattice(rs, w_inv, rs.simple(alpha), 0);
  if (k != 1) throw std::logic_error("extension inversion off level one");
  Root mu2 = f;
  for (int& c : mu2) c = -c;
  int mu2_idx = rs.index_if_positive(mu2);
  if (mu2_idx < 0) throw std::logic_error("extension root not positive");
  if (I.roots.test(mu2_idx)) throw std::logic_error("extension root already present");
  if (!rs.in_h[mu2_idx]) throw std::logic_error("extension root orthogonal to theta");
  Root residue = rs.theta;
  for (int j = 0; j < rs.rank; ++j) residue[j] -= mu2[j];
  if (!rs.is_positive_root(residue)) throw std::logic_error("theta minus extension root not a root");

  AbelianIdeal next;
  next.roots = I.roots;
  next.roots.set(mu2_idx);
  next.w = compose(rs, simple_reflection(rs, alpha + 1), I.w);
  next.z = z_of(rs, next.w);

  Root expected = mu;
  int p = rs.pairing(mu, alpha);
  expected[alpha] -= p;
  Root got = rootlet_of(rs, next.w);
  if (got != expected) throw std::logic_error("extension rootlet is not s_alpha(rootlet)");
  if (!rs.root_leq(got, mu) || got == mu)
    throw std::logic_error("extension rootlet did not strictly descend");
  next.rootlet_idx = rs.index_if_positive(got);
  return next;
}

AbelianIdeal chain_to(const RootSystem& rs, const AbelianIdeal& I, const Root& mu_prime) {
  if (I.roots.empty()) throw std::invalid_argument("chain_to needs a nonzero ideal");
  int target = rs.index_if_positive(mu_prime);
  if (target < 0 || !rs.is_long[target])
    throw std::invalid_argument("not a long positive root: " + root_str(rs, mu_prime));
  Root mu = rs.positive[rootlet(rs, I)];
  if (!rs.root_leq(mu_prime, mu))
    throw std::invalid_argument(root_str(rs, mu_prime) + " is not below the rootlet");

  std::optional<AbelianIdeal> found;
  auto rec = [&](auto&& self, const AbelianIdeal& J) -> void {
    if (found) return;
    Root cur = rs.positive[rootlet(rs, J)];
    if (cur == mu_prime) {
      found = J;
      return;
    }
    for (int a = 0; a < rs.rank && !found; ++a) {
      if (rs.height(cur) < 2) break;
      if (rs.bilinear(rs.simple(a), cur) <= Rat(0)) continue;
      Root nxt = cur;
      nxt[a] -= rs.pairing(cur, a);
      if (!rs.root_leq(mu_prime, nxt)) continue;
      self(self, extend(rs, J, a));
    }
  };
  rec(rec, I);
  if (!found) throw std::logic_error("no descent path from " + root_str(rs, mu) + " to " +
                                     root_str(rs, mu_prime));
  long long added = corho_level(rs, mu) - corho_level(rs, mu_prime);
  if (found->roots.count() != I.roots.count() + added)
    throw std::logic_error("descent path length off");
  return *found;
}

int span_rank(const RootSystem& rs, const RootSet& s) {
  std::vector<RatVec> rows;
  for (int i : s.indices()) {
    RatVec row(rs.rank);
    for (int j = 0; j < rs.rank; ++j) row[j] = Rat(rs.positive[i][j]);
    rows.push_back(std::move(row));
  }
  int r = 0;
  for (int col = 0; col < rs.rank && r < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int row = r; row < static_cast<int>(rows.size()); ++row) {
      if (rows[row][col] != Rat(0)) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (int row = r + 1; row < static_cast<int>(rows.size()); ++row) {
      if (rows[row][col] == Rat(0)) continue;
      Rat f = rows[row][col] / rows[r][col];
      for (int j = col; j < rs.rank; ++j) rows[row][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

bool full_rank(const RootSystem& rs, const RootSet& s) { return span_rank(rs, s) == rs.rank; }

}  // namespace rootlet
