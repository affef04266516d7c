#pragma once

#include <optional>
#include <vector>

#include "rootlet/ideals.hpp"

namespace rootlet {

enum class JoinMode { comparable, overlap_max, disjoint_bridge };

struct JoinResult {
  Root value;
  JoinMode mode;
  std::optional<Root> bridge;  // present only for disjoint_bridge
};

// Least upper bound of two positive roots in the root order, in closed form:
// the coordinate-wise maximum when the union of the supports is connected,
// otherwise eta + beta + (sum of the simple roots on the tree path between
// the supports).  The result is checked to be a positive root.
JoinResult join(const RootSystem& rs, const Root& eta, const Root& beta);

// Independent oracle: the unique minimal element of the set of common upper
// bounds; throws when the minimum is not unique (it always is).
Root join_oracle(const RootSystem& rs, const Root& eta, const Root& beta);

Root join_many(const RootSystem& rs, const std::vector<Root>& roots);

// Union of the maximal abelian ideals = roots whose principal upper set is
// abelian; both routes are computed and compared.
RootSet commutative_roots(const RootSystem& rs, const Atlas& atlas);

struct DeltaSlice {
  int alpha = -1;            // simple-root index
  int coeff = 0;
  std::vector<int> members;  // positive-root indices with that alpha-coefficient
  int min_idx = -1;          // unique minimum (-1 for an empty slice)
  int max_idx = -1;
  bool join_closed = true;
};

// The sub-poset of positive roots whose alpha-coefficient is exactly i.
DeltaSlice delta_slice(const RootSystem& rs, int alpha, int i);

}  // namespace rootlet
