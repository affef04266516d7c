#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rootlet/rational.hpp"

namespace rootlet {

// ---------------------------------------------------------------------------
// Cartan types
// ---------------------------------------------------------------------------

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family;
  int rank;

  // Parses "E8", "b3", ... and validates the family/rank bounds
  // (A>=1, B>=2, C>=2, D>=4, E in {6,7,8}, F=4, G=2).
  static CartanType parse(const std::string& s);
  std::string name() const;
  bool operator==(const CartanType& o) const { return family == o.family && rank == o.rank; }
};

// The battery of all irreducible types of rank <= 8, in a fixed order.
std::vector<CartanType> all_types_up_to_rank8();

// ---------------------------------------------------------------------------
// Roots and root sets
// ---------------------------------------------------------------------------

// A root (or any lattice vector) as integer coefficients over the simple
// roots, in the internal (Bourbaki) numbering.
using Root = std::vector<int>;

// Subset of the positive roots, as a bitset over the canonical root order.
// 128 bits covers every type this build accepts (E8 has 120 positive roots).
struct RootSet {
  std::array<std::uint64_t, 2> w{0, 0};

  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  bool empty() const { return w[0] == 0 && w[1] == 0; }
  bool subset_of(const RootSet& o) const { return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0; }

  friend RootSet operator&(const RootSet& a, const RootSet& b) {
    return RootSet{{a.w[0] & b.w[0], a.w[1] & b.w[1]}};
  }
  friend RootSet operator|(const RootSet& a, const RootSet& b) {
    return RootSet{{a.w[0] | b.w[0], a.w[1] | b.w[1]}};
  }
  friend RootSet operator-(const RootSet& a, const RootSet& b) {
    return RootSet{{a.w[0] & ~b.w[0], a.w[1] & ~b.w[1]}};
  }
  bool operator==(const RootSet& o) const { return w == o.w; }
  bool operator<(const RootSet& o) const { return w < o.w; }

  std::vector<int> indices() const;
  static RootSet of(const std::vector<int>& idx);
  static RootSet full(int n);
};

enum class Numbering { bourbaki, paper };

Numbering numbering_parse(const std::string& s);

// ---------------------------------------------------------------------------
// Root system
// ---------------------------------------------------------------------------

struct RootSystem {
  CartanType type;
  int rank = 0;

  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<Rat> d;                    // d[i] = (alpha_i, alpha_i)/2; long roots have length^2 = 2
  std::vector<std::vector<Rat>> bilin;   // bilin[i][j] = (alpha_i, alpha_j)
  std::vector<std::vector<int>> adj;     // Dynkin-diagram neighbours of each node

  std::vector<Root> positive;            // all positive roots, sorted by height then lex coefficients
  std::map<Root, int> index_of;          // coefficient vector -> index in `positive`
  std::vector<std::vector<int16_t>> sum_idx;  // sum_idx[i][j]: index of positive[i]+positive[j], or -1

  Root theta;                            // highest root
  int theta_idx = -1;
  RatVec rho;                            // half-sum of the positive roots
  std::vector<char> is_long;             // per positive root
  std::vector<char> in_h;                // per positive root: (gamma, theta) != 0
  std::vector<int> h_set;                // sorted indices of H
  std::vector<int> simple_long;          // 0-based simple indices of the long simple roots
  std::vector<int> simple_pos_idx;       // positive-root index of alpha_i
  std::vector<int> long_pos;             // sorted indices of the long positive roots

  std::vector<int> paper_to_internal;    // display permutation; identity except E8

  static RootSystem build(CartanType t);

  // --- bilinear form -------------------------------------------------------
  Rat bilinear(const RatVec& x, const RatVec& y) const;
  Rat bilinear(const Root& x, const Root& y) const;
  Rat bilinear(const Root& x, const RatVec& y) const;
  int pairing(const Root& x, int i) const;  // <x, alpha_i^vee>, always an integer
  Root coroot(const Root& g) const;         // 2g/(g,g); integral in simple-root coordinates

  // --- membership and the root order ---------------------------------------
  int index_if_positive(const Root& g) const;  // -1 when not a positive root
  bool is_positive_root(const Root& g) const { return index_if_positive(g) >= 0; }
  bool is_root(const Root& g) const;
  bool root_leq(const Root& mu, const Root& nu) const;  // nu - mu has all coefficients >= 0
  bool root_leq(int mu, int nu) const;
  int height(const Root& g) const;

  // --- derived root operations ---------------------------------------------
  Root half_floor(const Root& g) const;        // coordinate-wise floor of g/2
  RootSet principal_upper(int idx) const;      // all positive roots >= positive[idx]
  std::vector<int> support(const Root& g) const;
  bool connected(const std::vector<int>& nodes) const;  // in the Dynkin diagram
  Root simple(int i) const;
  Root pi_l_sum() const;                       // sum of the long simple roots
  bool simply_laced() const { return simple_long.size() == static_cast<size_t>(rank); }

  RootSet upper_closure(const RootSet& s) const;
  bool upper_closed(const RootSet& s) const;
  bool abelian(const RootSet& s) const;        // no two members (equal allowed) sum to a root

  // --- numbering adapter ----------------------------------------------------
  std::vector<int> display_coeffs(const Root& g, Numbering nb) const;
  Root from_display(const std::vector<int>& c, Numbering nb) const;
  std::string digit_string(const Root& g, Numbering nb) const;   // "12222101"
  std::string coeff_string(const Root& g, Numbering nb) const;   // "1,2,2,2,2,1,0,1"
  std::string pretty(const Root& g, Numbering nb = Numbering::bourbaki) const;  // theta/alpha_i aliases
};

int classical_positive_count(CartanType t);

}  // namespace rootlet
