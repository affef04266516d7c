#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rootlet/rootsys.hpp"

namespace rootlet {

// Integer matrix acting on simple-root coordinates.  Weyl group elements are
// integral in this basis, so no rational entries are ever needed here.
struct Mat {
  int n = 0;
  std::vector<std::vector<int>> a;  // a[row][col]

  static Mat id(int n);
  Mat operator*(const Mat& o) const;
  Root apply(const Root& x) const;
  RatVec apply(const RatVec& x) const;
  bool operator==(const Mat& o) const { return a == o.a; }
};

// Element of V + R*delta.  The imaginary root delta is isotropic and fixed by
// the whole affine Weyl group; no Lambda-component is carried anywhere.
struct AffineVec {
  RatVec finite;
  Rat delta{0};
  bool operator==(const AffineVec& o) const { return finite == o.finite && delta == o.delta; }
};

// w = v * t_r with v in the finite Weyl group and r in the coroot lattice.
// Acting on x in V + R*delta:  w(x) = v(x_V) + (x_delta - (x_V, r)) delta.
struct AffineElt {
  Mat v, v_inv;
  Root r;  // integral in simple-root coordinates; lies in the coroot lattice
  std::optional<std::vector<int>> word;  // product s_{word[0]} . s_{word[1]} . ...

  bool same_as(const AffineElt& o) const { return v == o.v && r == o.r; }
};

AffineElt affine_identity(const RootSystem& rs);
// i = 0 gives s_0 = s_theta * t_{-theta^vee}; i in 1..rank gives the finite s_i.
AffineElt simple_reflection(const RootSystem& rs, int i);
AffineElt compose(const RootSystem& rs, const AffineElt& a, const AffineElt& b);
AffineElt inverse(const RootSystem& rs, const AffineElt& w);
AffineElt from_word(const RootSystem& rs, const std::vector<int>& word);

AffineVec act(const RootSystem& rs, const AffineElt& w, const AffineVec& x);
// Fast path for lattice vectors; asserts the delta coefficient stays integral.
std::pair<Root, int> act_lattice(const RootSystem& rs, const AffineElt& w, const Root& x, int xdelta);

// The affine simple root alpha_i as a vector: alpha_0 = delta - theta.
AffineVec affine_simple_root(const RootSystem& rs, int i);

// Inversions of w among the positive affine roots, classified by delta-level.
// level_one holds the gamma with w(delta - gamma) < 0; `pure` records whether
// those are the only inversions (levels 0 and >=2 contribute nothing — a
// level->=3 inversion always forces one at level 2, so the scan stops there).
struct InversionScan {
  std::vector<int> level_one;
  bool pure = true;
};
InversionScan delta_one_inversions(const RootSystem& rs, const AffineElt& w);
bool is_minuscule(const RootSystem& rs, const AffineElt& w);

Root z_of(const RootSystem& rs, const AffineElt& w);  // v(r)

bool in_coroot_lattice(const RootSystem& rs, const Root& x);

}  // namespace rootlet
