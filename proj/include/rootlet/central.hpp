#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootlet/ideals.hpp"

namespace rootlet {

// Root-level picture of the centraliser of an abelian ideal: the Cartan part
// is the annihilator of span(I), and a root vector survives when its root
// never adds with a member of I to a root or to zero.
struct CentraliserProfile {
  RootSet pos;         // positive roots in the centraliser
  RootSet neg;         // gamma such that -gamma is in the centraliser
  int toral_dim = 0;   // rank - rank(span I)
  bool p1 = false;     // centraliser inside the nilradical
  bool p2 = false;     // ... and a sum of abelian ideals
  bool p3 = false;     // ... and itself an abelian ideal
};

CentraliserProfile centraliser(const RootSystem& rs, const RootSet& ideal);

// Definitional flags cross-checked against the closed-form criteria:
// p1 <-> full rank, p2 <-> full rank and theta - [theta/2] inside,
// p3 <-> the rootlet is a long simple root (and then the centraliser is the
// greatest ideal of its fiber).  Disagreements are reported, not thrown.
struct ClassifyReport {
  CentraliserProfile profile;
  bool crit_p1 = false, crit_p2 = false, crit_p3 = false;
  std::vector<std::string> mismatches;
};

ClassifyReport classify(const RootSystem& rs, const Atlas& atlas, const RootSet& ideal);

bool self_centralising(const RootSystem& rs, const RootSet& ideal);

// The long simple root alpha with {beta in Pi_l : beta <= rt(I)} = {alpha},
// when there is exactly one; cross-checked against counting the maximal
// abelian ideals containing I.
std::optional<int> unique_container(const RootSystem& rs, const Atlas& atlas,
                                    const RootSet& ideal);

// Minimal / maximal elements of a set of positive roots under the root order.
std::vector<int> minimal_elements(const RootSystem& rs, const RootSet& s);
std::vector<int> maximal_elements(const RootSystem& rs, const RootSet& s);

// The theta-complement pairing for a connected set Sigma of long simple
// roots: nu runs over the minimal roots of the intersection of the least
// fiber members, nu' = theta - nu over the maximal roots of the common
// complement of the greatest ones.
struct PairingReport {
  std::vector<int> sigma;                  // simple-root indices, ascending
  std::vector<int> left;                   // positive-root indices, min of the intersection
  std::vector<int> right;                  // positive-root indices, max of the complement
  std::vector<std::pair<int, int>> pairs;  // (nu, theta - nu)
  bool degenerate_theta = false;           // left = {theta}, forcing right = {}
  bool ok = true;
  std::vector<std::string> failures;
};

PairingReport sigma_pairs(const RootSystem& rs, const Atlas& atlas,
                          const std::vector<int>& sigma);
PairingReport stunning_pairs(const RootSystem& rs, const Atlas& atlas, int alpha);

std::string pairing_markdown(const RootSystem& rs, const PairingReport& report, Numbering nb);
std::string pairing_csv(const RootSystem& rs, const PairingReport& report, Numbering nb);

// The E8 four-column table: per long simple root, the minimal roots of the
// greatest and least fiber members and the maximal roots outside the greatest
// one, matched so that each row's last two columns sum to theta.
struct Table1Row {
  int block = 0;    // display index of the simple root, 1-based
  Root max_min;     // the element of min(I(alpha)_max) below min_min
  Root min_min;     // an element of min(I(alpha)_min)
  Root comp_max;    // theta - min_min, an element of max(positive \ I(alpha)_max)
};

std::vector<Table1Row> table1(const RootSystem& rs, const Atlas& atlas, Numbering nb);
std::string table1_markdown(const RootSystem& rs, const std::vector<Table1Row>& rows,
                            Numbering nb);
std::string table1_csv(const RootSystem& rs, const std::vector<Table1Row>& rows, Numbering nb);

}  // namespace rootlet
