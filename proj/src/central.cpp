#include "rootlet/central.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rootlet {

namespace {

std::string set_str(const RootSystem& rs, const RootSet& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ", ";
    out += rs.coeff_string(rs.positive[i], Numbering::bourbaki);
    first = false;
  }
  return out + "}";
}

bool upper_is_abelian(const RootSystem& rs, int idx) {
  return rs.abelian(rs.principal_upper(idx));
}

// 1-based position of the simple root in the chosen display numbering.
int display_position(const RootSystem& rs, int a, Numbering nb) {
  if (nb == Numbering::bourbaki) return a + 1;
  for (int j = 0; j < rs.rank; ++j)
    if (rs.paper_to_internal[j] == a) return j + 1;
  throw std::logic_error("display permutation misses a node");
}

std::string sigma_label(const RootSystem& rs, const std::vector<int>& sigma, Numbering nb) {
  std::vector<int> shown;
  for (int a : sigma) shown.push_back(display_position(rs, a, nb));
  std::sort(shown.begin(), shown.end());
  std::string out;
  for (std::size_t i = 0; i < shown.size(); ++i) {
    if (i) out += "+";
    out += "alpha" + std::to_string(shown[i]);
  }
  return out;
}

}  // namespace

CentraliserProfile centraliser(const RootSystem& rs, const RootSet& ideal) {
  const int m = static_cast<int>(rs.positive.size());
  const std::vector<int> members = ideal.indices();
  CentraliserProfile prof;

  for (int g = 0; g < m; ++g) {
    bool pos_ok = true, neg_ok = true;
    for (int i : members) {
      if (rs.sum_idx[g][i] >= 0) pos_ok = false;
      if (neg_ok) {
        if (i == g) {
          neg_ok = false;
        } else {
          Root diff(rs.rank);
          for (int j = 0; j < rs.rank; ++j) diff[j] = rs.positive[i][j] - rs.positive[g][j];
          if (rs.is_root(diff)) neg_ok = false;
        }
      }
      if (!pos_ok && !neg_ok) break;
    }
    if (pos_ok) prof.pos.set(g);
    if (neg_ok) prof.neg.set(g);
  }

  prof.toral_dim = rs.rank - span_rank(rs, ideal);
  prof.p1 = prof.toral_dim == 0 && prof.neg.empty();
  if (prof.p1) {
    prof.p2 = true;
    for (int g : prof.pos.indices()) {
      if (!upper_is_abelian(rs, g)) {
        prof.p2 = false;
        break;
      }
    }
    prof.p3 = rs.upper_closed(prof.pos) && rs.abelian(prof.pos);
  }
  return prof;
}

ClassifyReport classify(const RootSystem& rs, const Atlas& atlas, const RootSet& ideal) {
  if (ideal.empty()) throw std::invalid_argument("classify needs a nonzero ideal");
  int id = atlas.id_for(ideal);
  if (id < 0) throw std::invalid_argument("not an abelian ideal: " + set_str(rs, ideal));

  ClassifyReport rep;
  rep.profile = centraliser(rs, ideal);

  rep.crit_p1 = full_rank(rs, ideal);
  Root rest = rs.theta;
  {
    Root half = rs.half_floor(rs.theta);
    for (int j = 0; j < rs.rank; ++j) rest[j] -= half[j];
  }
  int rest_idx = rs.index_if_positive(rest);
  if (rest_idx < 0) throw std::logic_error("theta minus [theta/2] is not a root");
  rep.crit_p2 = rep.crit_p1 && ideal.test(rest_idx);
  int rt = *atlas.ideals[id].rootlet_idx;
  rep.crit_p3 = rs.is_long[rt] && rs.height(rs.positive[rt]) == 1;

  auto note = [&](const char* flag, bool def, bool crit) {
    if (def == crit) return;
    std::ostringstream os;
    os << rs.type.name() << " ideal " << set_str(rs, ideal) << ": " << flag
       << " definition=" << (def ? "true" : "false")
       << " criterion=" << (crit ? "true" : "false");
    rep.mismatches.push_back(os.str());
  };
  note("p1", rep.profile.p1, rep.crit_p1);
  note("p2", rep.profile.p2, rep.crit_p2);
  note("p3", rep.profile.p3, rep.crit_p3);

  if (rep.profile.p3 && rep.crit_p3) {
    const RootSet& top = atlas.mu_max(rs, rt).roots;
    if (!(rep.profile.pos == top)) {
      rep.mismatches.push_back(rs.type.name() + " ideal " + set_str(rs, ideal) +
                               ": centraliser differs from the greatest fiber member " +
                               set_str(rs, top));
    }
  }
  return rep;
}

bool self_centralising(const RootSystem& rs, const RootSet& ideal) {
  CentraliserProfile prof = centraliser(rs, ideal);
  return prof.toral_dim == 0 && prof.neg.empty() && prof.pos == ideal;
}

std::optional<int> unique_container(const RootSystem& rs, const Atlas& atlas,
                                    const RootSet& ideal) {
  if (ideal.empty()) throw std::invalid_argument("unique_container needs a nonzero ideal");
  int id = atlas.id_for(ideal);
  if (id < 0) throw std::invalid_argument("not an abelian ideal: " + set_str(rs, ideal));
  int rt = *atlas.ideals[id].rootlet_idx;

  std::vector<int> below;
  for (int a : rs.simple_long)
    if (rs.root_leq(rs.simple_pos_idx[a], rt)) below.push_back(a);

  std::vector<int> containers;
  for (int mid : atlas.maximal)
    if (ideal.subset_of(atlas.ideals[mid].roots)) containers.push_back(mid);

  if ((below.size() == 1) != (containers.size() == 1))
    throw std::logic_error("container criterion mismatch for " + set_str(rs, ideal));
  if (below.size() != 1) return std::nullopt;
  if (!(atlas.ideals[containers[0]].roots == atlas.mu_max(rs, rs.simple_pos_idx[below[0]]).roots))
    throw std::logic_error("unique container is not the expected greatest fiber member");
  return below[0];
}

std::vector<int> minimal_elements(const RootSystem& rs, const RootSet& s) {
  std::vector<int> out;
  for (int i : s.indices()) {
    bool minimal = true;
    for (int j : s.indices()) {
      if (j != i && rs.root_leq(j, i)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<int> maximal_elements(const RootSystem& rs, const RootSet& s) {
  std::vector<int> out;
  for (int i : s.indices()) {
    bool maximal = true;
    for (int j : s.indices()) {
      if (j != i && rs.root_leq(i, j)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

PairingReport sigma_pairs(const RootSystem& rs, const Atlas& atlas,
                          const std::vector<int>& sigma) {
  if (sigma.empty()) throw std::invalid_argument("sigma must be nonempty");
  std::set<int> seen;
  for (int a : sigma) {
    if (a < 0 || a >= rs.rank) throw std::invalid_argument("simple-root index out of range");
    if (!seen.insert(a).second) throw std::invalid_argument("repeated simple root in sigma");
    if (std::find(rs.simple_long.begin(), rs.simple_long.end(), a) == rs.simple_long.end())
      throw std::invalid_argument("sigma must consist of long simple roots");
  }
  PairingReport rep;
  rep.sigma.assign(seen.begin(), seen.end());
  if (!rs.connected(rep.sigma))
    throw std::invalid_argument("sigma must be connected in the Dynkin diagram");

  RootSet inter_min = RootSet::full(static_cast<int>(rs.positive.size()));
  RootSet union_max;
  for (int a : rep.sigma) {
    inter_min = inter_min & atlas.mu_min(rs, rs.simple_pos_idx[a]).roots;
    union_max = union_max | atlas.mu_max(rs, rs.simple_pos_idx[a]).roots;
  }
  RootSet comp = RootSet::full(static_cast<int>(rs.positive.size())) - union_max;

  rep.left = minimal_elements(rs, inter_min);
  rep.right = maximal_elements(rs, comp);
  std::sort(rep.left.begin(), rep.left.end());
  std::sort(rep.right.begin(), rep.right.end());

  auto flunk = [&](const std::string& msg) {
    rep.ok = false;
    rep.failures.push_back(rs.type.name() + " " + sigma_label(rs, rep.sigma, Numbering::bourbaki) +
                           ": " + msg);
  };

  for (int i : rep.right)
    if (!rs.in_h[i]) flunk("complement maximum " + rs.coeff_string(rs.positive[i], Numbering::bourbaki) +
                           " lies outside H");

  bool has_theta =
      std::find(rep.left.begin(), rep.left.end(), rs.theta_idx) != rep.left.end();
  if (has_theta) {
    rep.degenerate_theta = true;
    if (rep.left.size() != 1) flunk("theta is minimal in a larger set");
    if (!rep.right.empty()) flunk("theta on the left demands an empty right side");
    return rep;
  }

  std::set<int> matched;
  for (int nu : rep.left) {
    Root partner = rs.theta;
    for (int j = 0; j < rs.rank; ++j) partner[j] -= rs.positive[nu][j];
    int pidx = rs.index_if_positive(partner);
    if (pidx < 0) {
      flunk("theta minus " + rs.coeff_string(rs.positive[nu], Numbering::bourbaki) +
            " is not a positive root");
      continue;
    }
    if (std::find(rep.right.begin(), rep.right.end(), pidx) == rep.right.end()) {
      flunk("partner of " + rs.coeff_string(rs.positive[nu], Numbering::bourbaki) +
            " is not maximal in the complement");
      continue;
    }
    matched.insert(pidx);
    rep.pairs.emplace_back(nu, pidx);
  }
  if (matched.size() != rep.right.size()) flunk("pairing is not onto the complement maxima");
  return rep;
}

PairingReport stunning_pairs(const RootSystem& rs, const Atlas& atlas, int alpha) {
  return sigma_pairs(rs, atlas, {alpha});
}

std::string pairing_markdown(const RootSystem& rs, const PairingReport& report, Numbering nb) {
  std::ostringstream os;
  os << "| sigma | nu | theta-nu |\n|---|---|---|\n";
  for (const auto& [nu, partner] : report.pairs)
    os << "| " << sigma_label(rs, report.sigma, nb) << " | "
       << rs.digit_string(rs.positive[nu], nb) << " | "
       << rs.digit_string(rs.positive[partner], nb) << " |\n";
  if (report.degenerate_theta)
    os << "| " << sigma_label(rs, report.sigma, nb) << " | "
       << rs.digit_string(rs.theta, nb) << " | - |\n";
  return os.str();
}

std::string pairing_csv(const RootSystem& rs, const PairingReport& report, Numbering nb) {
  std::ostringstream os;
  os << "sigma,nu,theta_minus_nu\n";
  for (const auto& [nu, partner] : report.pairs)
    os << sigma_label(rs, report.sigma, nb) << "," << rs.digit_string(rs.positive[nu], nb)
       << "," << rs.digit_string(rs.positive[partner], nb) << "\n";
  if (report.degenerate_theta)
    os << sigma_label(rs, report.sigma, nb) << "," << rs.digit_string(rs.theta, nb) << ",-\n";
  return os.str();
}

std::vector<Table1Row> table1(const RootSystem& rs, const Atlas& atlas, Numbering nb) {
  if (!(rs.type == CartanType{Family::E, 8}))
    throw std::invalid_argument("the four-column table is defined for E8 only");

  std::vector<Table1Row> rows;
  for (int pos = 1; pos <= rs.rank; ++pos) {
    int a = nb == Numbering::paper ? rs.paper_to_internal[pos - 1] : pos - 1;
    const RootSet& lo = atlas.mu_min(rs, rs.simple_pos_idx[a]).roots;
    const RootSet& hi = atlas.mu_max(rs, rs.simple_pos_idx[a]).roots;
    std::vector<int> lo_min = minimal_elements(rs, lo);
    std::vector<int> hi_min = minimal_elements(rs, hi);
    RootSet comp = RootSet::full(static_cast<int>(rs.positive.size())) - hi;
    std::vector<int> comp_max = maximal_elements(rs, comp);
    if (lo_min.size() != comp_max.size())
      throw std::logic_error("row mismatch between fiber minima and complement maxima");

    std::vector<Table1Row> block;
    for (int nu : lo_min) {
      Table1Row row;
      row.block = pos;
      row.min_min = rs.positive[nu];

      int anchor = -1;
      for (int m : hi_min) {
        if (rs.root_leq(m, nu)) {
          if (anchor >= 0) throw std::logic_error("two anchors below one fiber minimum");
          anchor = m;
        }
      }
      if (anchor < 0) throw std::logic_error("no anchor below a fiber minimum");
      row.max_min = rs.positive[anchor];

      Root partner = rs.theta;
      for (int j = 0; j < rs.rank; ++j) partner[j] -= row.min_min[j];
      int pidx = rs.index_if_positive(partner);
      if (pidx < 0 || !comp.test(pidx))
        throw std::logic_error("row partner is not outside the greatest fiber member");
      if (std::find(comp_max.begin(), comp_max.end(), pidx) == comp_max.end())
        throw std::logic_error("row partner is not maximal in the complement");
      row.comp_max = partner;
      block.push_back(std::move(row));
    }
    std::sort(block.begin(), block.end(), [&](const Table1Row& x, const Table1Row& y) {
      bool xeq = x.max_min == x.min_min, yeq = y.max_min == y.min_min;
      if (xeq != yeq) return xeq;
      return rs.digit_string(x.max_min, nb) < rs.digit_string(y.max_min, nb);
    });
    rows.insert(rows.end(), block.begin(), block.end());
  }
  return rows;
}

std::string table1_markdown(const RootSystem& rs, const std::vector<Table1Row>& rows,
                            Numbering nb) {
  std::ostringstream os;
  os << "| i | min(I(a_i)_max) | min(I(a_i)_min) | max(D+ \\ I(a_i)_max) |\n";
  os << "|---|---|---|---|\n";
  for (const auto& row : rows)
    os << "| " << row.block << " | " << rs.digit_string(row.max_min, nb) << " | "
       << rs.digit_string(row.min_min, nb) << " | " << rs.digit_string(row.comp_max, nb)
       << " |\n";
  return os.str();
}

std::string table1_csv(const RootSystem& rs, const std::vector<Table1Row>& rows, Numbering nb) {
  std::ostringstream os;
  os << "i,min_of_greatest,min_of_least,max_outside_greatest\n";
  for (const auto& row : rows)
    os << row.block << "," << rs.digit_string(row.max_min, nb) << ","
       << rs.digit_string(row.min_min, nb) << "," << rs.digit_string(row.comp_max, nb) << "\n";
  return os.str();
}

}  // namespace rootlet
