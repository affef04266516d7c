#include "rootlet/affine.hpp"

#include <stdexcept>

namespace rootlet {

Mat Mat::id(int n) {
  Mat m;
  m.n = n;
  m.a.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m.a[i][i] = 1;
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  Mat m;
  m.n = n;
  m.a.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int aik = a[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) m.a[i][j] += aik * o.a[k][j];
    }
  return m;
}

Root Mat::apply(const Root& x) const {
  Root y(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[i] += a[i][j] * x[j];
  return y;
}

RatVec Mat::apply(const RatVec& x) const {
  RatVec y(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[i] += Rat(a[i][j]) * x[j];
  return y;
}

bool in_coroot_lattice(const RootSystem& rs, const Root& x) {
  // x = sum m_i alpha_i^vee  iff  x_i * d_i is an integer for every i.
  for (int i = 0; i < rs.rank; ++i)
    if (!is_integer(Rat(x[i]) * rs.d[i])) return false;
  return true;
}

AffineElt affine_identity(const RootSystem& rs) {
  AffineElt w;
  w.v = Mat::id(rs.rank);
  w.v_inv = w.v;
  w.r.assign(rs.rank, 0);
  w.word = std::vector<int>{};
  return w;
}

namespace {

// Reflection in an arbitrary root: s_g(x) = x - <x, g^vee> g.  Integral on the
// root lattice, hence an integer matrix.
Mat reflection_matrix(const RootSystem& rs, const Root& g) {
  Root gv = rs.coroot(g);
  Mat m = Mat::id(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    int pj = static_cast<int>(as_integer(rs.bilinear(rs.simple(j), to_ratvec(gv))));
    for (int i = 0; i < rs.rank; ++i) m.a[i][j] -= pj * g[i];
  }
  return m;
}

}  // namespace

AffineElt simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.rank) throw std::invalid_argument("affine reflection index out of range 0.." + std::to_string(rs.rank));
  AffineElt w;
  if (i == 0) {
    w.v = reflection_matrix(rs, rs.theta);
    w.v_inv = w.v;
    Root tv = rs.coroot(rs.theta);
    w.r.resize(rs.rank);
    for (int k = 0; k < rs.rank; ++k) w.r[k] = -tv[k];
  } else {
    w.v = reflection_matrix(rs, rs.simple(i - 1));
    w.v_inv = w.v;
    w.r.assign(rs.rank, 0);
  }
  w.word = std::vector<int>{i};
  return w;
}

AffineElt compose(const RootSystem& rs, const AffineElt& a, const AffineElt& b) {
  (void)rs;
  AffineElt w;
  w.v = a.v * b.v;
  w.v_inv = b.v_inv * a.v_inv;
  // (v1 t_{r1})(v2 t_{r2}) = v1 v2 t_{r2 + v2^{-1}(r1)}
  Root moved = b.v_inv.apply(a.r);
  w.r = b.r;
  for (int k = 0; k < static_cast<int>(w.r.size()); ++k) w.r[k] += moved[k];
  if (a.word && b.word) {
    w.word = *a.word;
    w.word->insert(w.word->end(), b.word->begin(), b.word->end());
  }
  return w;
}

AffineElt inverse(const RootSystem& rs, const AffineElt& w) {
  (void)rs;
  AffineElt u;
  u.v = w.v_inv;
  u.v_inv = w.v;
  Root moved = w.v.apply(w.r);
  u.r.resize(moved.size());
  for (size_t k = 0; k < moved.size(); ++k) u.r[k] = -moved[k];
  if (w.word) {
    u.word = std::vector<int>(w.word->rbegin(), w.word->rend());
  }
  return u;
}

AffineElt from_word(const RootSystem& rs, const std::vector<int>& word) {
  AffineElt w = affine_identity(rs);
  for (int i : word) w = compose(rs, w, simple_reflection(rs, i));
  return w;
}

AffineVec act(const RootSystem& rs, const AffineElt& w, const AffineVec& x) {
  AffineVec y;
  y.finite = w.v.apply(x.finite);
  y.delta = x.delta - rs.bilinear(w.r, x.finite);
  return y;
}

std::pair<Root, int> act_lattice(const RootSystem& rs, const AffineElt& w, const Root& x, int xdelta) {
  Root f = w.v.apply(x);
  long long shift = as_integer(rs.bilinear(x, w.r));
  return {std::move(f), xdelta - static_cast<int>(shift)};
}

AffineVec affine_simple_root(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.rank) throw std::invalid_argument("affine root index out of range");
  AffineVec x;
  if (i == 0) {
    x.finite = to_ratvec(rs.theta);
    for (Rat& c : x.finite) c = -c;
    x.delta = Rat(1);
  } else {
    x.finite = to_ratvec(rs.simple(i - 1));
    x.delta = Rat(0);
  }
  return x;
}

namespace {

// Sign of the affine root (b, k*delta): positive iff k > 0, or k = 0 and b > 0.
int affine_sign(const RootSystem& rs, const Root& b, int k) {
  if (k != 0) return k > 0 ? 1 : -1;
  for (int i = 0; i < rs.rank; ++i)
    if (b[i] != 0) return b[i] > 0 ? 1 : -1;
  throw std::logic_error("zero vector is not an affine root");
}

}  // namespace

InversionScan delta_one_inversions(const RootSystem& rs, const AffineElt& w) {
  InversionScan out;
  int np = static_cast<int>(rs.positive.size());
  for (int i = 0; i < np; ++i) {
    // level 1, negative finite part: delta - gamma
    Root neg(rs.rank);
    for (int k = 0; k < rs.rank; ++k) neg[k] = -rs.positive[i][k];
    auto [b1, k1] = act_lattice(rs, w, neg, 1);
    if (affine_sign(rs, b1, k1) < 0) out.level_one.push_back(i);
    // level 0
    auto [b0, k0] = act_lattice(rs, w, rs.positive[i], 0);
    if (affine_sign(rs, b0, k0) < 0) out.pure = false;
    // level 1, positive finite part
    auto [bp, kp] = act_lattice(rs, w, rs.positive[i], 1);
    if (affine_sign(rs, bp, kp) < 0) out.pure = false;
    // level 2, both signs; an inversion at any level >= 2 shows up here
    auto [b2, k2] = act_lattice(rs, w, rs.positive[i], 2);
    if (affine_sign(rs, b2, k2) < 0) out.pure = false;
    auto [b2n, k2n] = act_lattice(rs, w, neg, 2);
    if (affine_sign(rs, b2n, k2n) < 0) out.pure = false;
  }
  return out;
}

bool is_minuscule(const RootSystem& rs, const AffineElt& w) {
  return delta_one_inversions(rs, w).pure;
}

Root z_of(const RootSystem& rs, const AffineElt& w) {
  (void)rs;
  return w.v.apply(w.r);
}

}  // namespace rootlet
