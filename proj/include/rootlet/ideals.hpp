#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rootlet/affine.hpp"

namespace rootlet {

// An abelian ideal of the Borel, as its set of roots together with the
// minuscule affine Weyl element whose inversions delta - gamma cut it out.
struct AbelianIdeal {
  RootSet roots;
  AffineElt w;
  std::optional<int> rootlet_idx;  // index of w(2delta - theta); empty for the zero ideal
  Root z;                          // v(r)
};

struct Fiber {
  int mu_idx = -1;           // rootlet, as a positive-root index (always long)
  std::vector<int> members;  // ideal ids, ascending
  int min_id = -1;           // unique minimal member I(mu)_min
  int max_id = -1;           // unique maximal member I(mu)_max
};

struct Atlas {
  std::vector<AbelianIdeal> ideals;  // sorted by (size, root indices); id 0 is the zero ideal
  std::map<RootSet, int> id_of;
  std::vector<Fiber> fibers;         // ascending in mu_idx
  std::map<int, int> fiber_pos;      // mu_idx -> position in `fibers`
  std::vector<int> maximal;          // ids of the inclusion-maximal ideals
  int empty_id = 0;

  const Fiber& fiber(const RootSystem& rs, int mu_idx) const;
  const AbelianIdeal& mu_min(const RootSystem& rs, int mu_idx) const;
  const AbelianIdeal& mu_max(const RootSystem& rs, int mu_idx) const;
  int id_for(const RootSet& s) const;  // -1 when the set is not an abelian ideal
};

// Walks the minuscule elements of the affine Weyl group breadth-first,
// left-multiplying by s_0..s_n and keeping the products whose new inversion
// is delta - gamma for a fresh positive root gamma.
Atlas enumerate_ideals(const RootSystem& rs);

// Independent oracle: filters the upper-closed subsets of the positive roots
// by the no-pair-sums-to-a-root condition.  Exponential in principle, cheap in
// rank <= 8 practice; callers gate it by rank.
std::vector<RootSet> brute_force_enumerate(const RootSystem& rs);

Root rootlet_of(const RootSystem& rs, const AffineElt& w);  // w(2delta - theta)
int rootlet(const RootSystem& rs, const AbelianIdeal& I);   // throws on the zero ideal
Root z_of_ideal(const RootSystem& rs, const AbelianIdeal& I);

// All z in the coroot lattice with (z, gamma) in {-1,0,1,2} for every positive
// root gamma, enumerated over the 4^n grid of simple-root pairings.
std::vector<Root> z1_enumerate(const RootSystem& rs);

// The minimal-length Weyl element with v(theta) = mu, built by ascending from
// mu to theta through simple reflections that raise (rho, . ^vee) by one.
AffineElt v_mu(const RootSystem& rs, const Root& mu);

// One step of the rootlet-descent construction: requires mu = rt(I) non-simple
// and (alpha, mu) > 0; returns the ideal of s_alpha w, which adds the single
// root mu_2 in H with theta - mu_2 also a root, and has rootlet s_alpha(mu).
AbelianIdeal extend(const RootSystem& rs, const AbelianIdeal& I, int alpha);

// Iterated extend along a descending path of long roots from rt(I) to mu_prime.
AbelianIdeal chain_to(const RootSystem& rs, const AbelianIdeal& I, const Root& mu_prime);

bool full_rank(const RootSystem& rs, const RootSet& s);
int span_rank(const RootSystem& rs, const RootSet& s);

// (rho, mu^vee): the level raised by one along each ascent step above.
long long corho_level(const RootSystem& rs, const Root& mu);

}  // namespace rootlet
