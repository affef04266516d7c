#include "rootlet/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rootlet/central.hpp"
#include "rootlet/ideals.hpp"
#include "rootlet/lattice.hpp"

namespace rootlet {

namespace {

[[noreturn]] void bail(const std::string& msg) { throw std::runtime_error(msg); }

void demand(bool ok, const std::string& msg) {
  if (!ok) bail(msg);
}

Root vec_sub(const Root& a, const Root& b) {
  Root out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Root vec_add(const Root& a, const Root& b) {
  Root out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool is_zero(const Root& a) {
  return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// Shared state for one type's battery; the join table is filled on demand so
// filtered runs only pay for what they touch.
struct Ctx {
  const RootSystem& rs;
  const Atlas& atlas;
  const VerifyOptions& opt;
  std::vector<int16_t> join_tab;

  int npos() const { return static_cast<int>(rs.positive.size()); }

  int join_idx(int i, int j) {
    if (i == j) return i;
    const int n = npos();
    if (join_tab.empty()) join_tab.assign(static_cast<size_t>(n) * n, -1);
    int16_t& slot = join_tab[static_cast<size_t>(i) * n + j];
    if (slot < 0) {
      Root v = join(rs, rs.positive[i], rs.positive[j]).value;
      int k = rs.index_if_positive(v);
      if (k < 0) bail("join left the positive roots at (" + rs.coeff_string(rs.positive[i], Numbering::bourbaki) + ", " + rs.coeff_string(rs.positive[j], Numbering::bourbaki) + ")");
      slot = static_cast<int16_t>(k);
      join_tab[static_cast<size_t>(j) * n + i] = slot;
    }
    return slot;
  }
};

std::string rstr(const RootSystem& rs, int idx) {
  return rs.coeff_string(rs.positive[idx], Numbering::bourbaki);
}

std::string rstr(const RootSystem& rs, const Root& g) {
  return rs.coeff_string(g, Numbering::bourbaki);
}

bool is_e8(const RootSystem& rs) { return rs.type.family == Family::E && rs.rank == 8; }

// ---------------------------------------------------------------------------
// roots and the highest root
// ---------------------------------------------------------------------------

// Every positive root gamma splits as [gamma/2] + (gamma - [gamma/2]) with
// both halves roots (the floor possibly zero).
void check_root_facts(Ctx& c, CheckResult&) {
  const RootSystem& rs = c.rs;
  for (int i = 0; i < c.npos(); ++i) {
    const Root& g = rs.positive[i];
    Root hf = rs.half_floor(g);
    if (!is_zero(hf))
      demand(rs.is_positive_root(hf), "floor of half of " + rstr(rs, i) + " is " + rstr(rs, hf) + ", not a positive root");
    Root rest = vec_sub(g, hf);
    demand(rs.is_positive_root(rest), rstr(rs, i) + " minus its half-floor is " + rstr(rs, rest) + ", not a positive root");
  }
}

// theta - [theta/2] is a root that pairs nontrivially with theta.
void check_half_floor(Ctx& c, CheckResult& r) {
  const RootSystem& rs = c.rs;
  Root hf = rs.half_floor(rs.theta);
  Root g = vec_sub(rs.theta, hf);
  int gi = rs.index_if_positive(g);
  demand(gi >= 0, "theta minus [theta/2] = " + rstr(rs, g) + " is not a positive root");
  demand(rs.in_h[gi], "theta minus [theta/2] = " + rstr(rs, gi) + " is orthogonal to theta");
  r.details = "theta - [theta/2] = " + rstr(rs, gi);
}

// The sum of the long simple roots is a long positive root, is the join of
// its summands, and the least ideal in its fiber is the principal upper set
// at theta - [theta/2].
void check_pi_l_min(Ctx& c, CheckResult& r) {
  const RootSystem& rs = c.rs;
  Root p = rs.pi_l_sum();
  int pidx = rs.index_if_positive(p);
  demand(pidx >= 0, "sum of the long simple roots " + rstr(rs, p) + " is not a positive root");
  demand(rs.is_long[pidx], "sum of the long simple roots is short");
  std::vector<Root> longs;
  for (int i : rs.simple_long) longs.push_back(rs.simple(i));
  demand(join_many(rs, longs) == p, "join of the long simple roots differs from their sum");
  int hidx = rs.index_if_positive(vec_sub(rs.theta, rs.half_floor(rs.theta)));
  demand(hidx >= 0, "theta - [theta/2] is not a root");
  demand(c.atlas.mu_min(rs, pidx).roots == rs.principal_upper(hidx),
         "least ideal over " + rstr(rs, pidx) + " is not the upper set of theta - [theta/2]");
  r.details = "fiber of " + rstr(rs, pidx);
}

// (theta, sum of long simples) vanishes exactly for family C and for B2.
void check_theta_pi_l(Ctx& c, CheckResult& r) {
  const RootSystem& rs = c.rs;
  Rat b = rs.bilinear(rs.theta, rs.pi_l_sum());
  bool expected_zero = rs.type.family == Family::C || (rs.type.family == Family::B && rs.rank == 2);
  demand((b == Rat(0)) == expected_zero,
         "(theta, sum of long simples) = " + rat_string(b) + (expected_zero ? ", expected zero" : ", expected nonzero"));
  r.details = "(theta, sum of long simples) = " + rat_string(b);
}

// ---------------------------------------------------------------------------
// affine Weyl group plumbing
// ---------------------------------------------------------------------------

void check_affine_action(Ctx& c, CheckResult& r) {
  const RootSystem& rs = c.rs;
  std::mt19937 rng(c.opt.seed + static_cast<unsigned>(rs.rank) * 131u + static_cast<unsigned>(static_cast<char>(rs.type.family)));
  std::uniform_int_distribution<int> letter(0, rs.rank);
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<int> pick_simple(0, rs.rank - 1);
  std::uniform_int_distribution<int> level(-1, 2);
  const AffineElt id = affine_identity(rs);
  const int rounds = 12;
  for (int t = 0; t < rounds; ++t) {
    std::vector<int> word(len(rng));
    for (int& l : word) l = letter(rng);
    AffineElt w = from_word(rs, word);
    demand(in_coroot_lattice(rs, w.r), "translation part escaped the coroot lattice");

    AffineElt winv = inverse(rs, w);
    demand(compose(rs, w, winv).same_as(id) && compose(rs, winv, w).same_as(id),
           "inverse law failed for a word of length " + std::to_string(word.size()));

    size_t mid = word.size() / 2;
    AffineElt a = from_word(rs, {word.begin(), word.begin() + mid});
    AffineElt b = from_word(rs, {word.begin() + mid, word.end()});
    demand(compose(rs, a, b).same_as(w), "composition disagrees with word concatenation");

    AffineVec x{to_ratvec(rs.simple(pick_simple(rng))), Rat(level(rng))};
    demand(act(rs, w, x) == act(rs, a, act(rs, b, x)), "action is not a homomorphism");

    auto [fin, dl] = act_lattice(rs, w, rs.theta, 1);
    AffineVec ax = act(rs, w, AffineVec{to_ratvec(rs.theta), Rat(1)});
    demand(to_ratvec(fin) == ax.finite && Rat(dl) == ax.delta, "lattice action disagrees with the rational action");
  }
  r.details = std::to_string(rounds) + " random words";
}

// Each stored element is minuscule, its word length matches the ideal size,
// its level-one inversions cut out exactly the ideal, and (theta, r) is -2
// away from the zero ideal.
void check_minuscule_norm(Ctx& c, CheckResult&) {
  const RootSystem& rs = c.rs;
  for (size_t id = 0; id < c.atlas.ideals.size(); ++id) {
    const AbelianIdeal& I = c.atlas.ideals[id];
    demand(is_minuscule(rs, I.w), "stored element for ideal " + std::to_string(id) + " is not minuscule");
    demand(I.w.word && I.w.word->size() == static_cast<size_t>(I.roots.count()),
           "word length != ideal size at ideal " + std::to_string(id));
    InversionScan scan = delta_one_inversions(rs, I.w);
    demand(scan.pure && RootSet::of(scan.level_one) == I.roots,
           "level-one inversions do not cut out ideal " + std::to_string(id));
    Rat p = rs.bilinear(rs.theta, I.w.r);
    demand(p == (I.roots.empty() ? Rat(0) : Rat(-2)),
           "(theta, r) = " + rat_string(p) + " at ideal " + std::to_string(id));
  }
}

// ---------------------------------------------------------------------------
// the enumeration itself
// ---------------------------------------------------------------------------

void check_cardinality(Ctx& c, CheckResult& r) {
  size_t expected = size_t(1) << c.rs.rank;
  demand(c.atlas.ideals.size() == expected,
         "expected " + std::to_string(expected) + " ideals, found " + std::to_string(c.atlas.ideals.size()));
  r.details = std::to_string(expected) + " ideals";
}

void check_oracle_equivalence(Ctx& c, CheckResult& r) {
  if (c.rs.rank > c.opt.brute_cap) {
    r.status = CheckStatus::reported;
    r.details = "skipped: rank " + std::to_string(c.rs.rank) + " exceeds oracle cap " + std::to_string(c.opt.brute_cap);
    return;
  }
  std::set<RootSet> brute;
  for (const RootSet& s : brute_force_enumerate(c.rs)) brute.insert(s);
  std::set<RootSet> walked;
  for (const AbelianIdeal& I : c.atlas.ideals) walked.insert(I.roots);
  demand(brute == walked, "minuscule walk and upper-closed filter disagree ("
         + std::to_string(walked.size()) + " vs " + std::to_string(brute.size()) + " sets)");
  r.details = "matched " + std::to_string(brute.size()) + " sets";
}

void check_z_bijection(Ctx& c, CheckResult& r) {
  std::vector<Root> zs;
  for (const AbelianIdeal& I : c.atlas.ideals) zs.push_back(I.z);
  std::sort(zs.begin(), zs.end());
  demand(std::adjacent_find(zs.begin(), zs.end()) == zs.end(), "two ideals share a z vector");
  std::vector<Root> grid = z1_enumerate(c.rs);
  demand(zs == grid, "ideal z vectors differ from the pairing-grid enumeration ("
         + std::to_string(zs.size()) + " vs " + std::to_string(grid.size()) + ")");
  r.details = std::to_string(zs.size()) + " distinct vectors";
}

// z equals the coroot of the rootlet exactly on the least member of a fiber.
void check_z_mu_minimal(Ctx& c, CheckResult&) {
  const RootSystem& rs = c.rs;
  for (size_t id = 1; id < c.atlas.ideals.size(); ++id) {
    const AbelianIdeal& I = c.atlas.ideals[id];
    int rt = *I.rootlet_idx;
    bool least = c.atlas.fiber(rs, rt).min_id == static_cast<int>(id);
    bool zmatch = I.z == rs.coroot(rs.positive[rt]);
    demand(least == zmatch, "ideal " + std::to_string(id) + ": z " + (zmatch ? "matches" : "misses")
           + " the rootlet coroot but the ideal is " + (least ? "" : "not ") + "the fiber minimum");
  }
}

// |least ideal over mu| = (rho, theta^vee) - (rho, mu^vee) + 1.
void check_size_formula(Ctx& c, CheckResult&) {
  const RootSystem& rs = c.rs;
  long long top = corho_level(rs, rs.theta);
  for (const Fiber& f : c.atlas.fibers) {
    long long expected = top - corho_level(rs, rs.positive[f.mu_idx]) + 1;
    int got = c.atlas.mu_min(rs, f.mu_idx).roots.count();
    demand(got == expected, "least ideal over " + rstr(rs, f.mu_idx) + " has " + std::to_string(got)
           + " roots, formula gives " + std::to_string(expected));
  }
}

// ---------------------------------------------------------------------------
// fibers
// ---------------------------------------------------------------------------

void check_fiber_structure(Ctx& c, CheckResult& r) {
  const RootSystem& rs = c.rs;
  const Atlas& atlas = c.atlas;
  demand(atlas.fibers.size() == rs.long_pos.size(),
         "expected one fiber per long positive root (" + std::to_string(rs.long_pos.size()) + "), found "
         + std::to_string(atlas.fibers.size()));
  size_t total = 0;
  int prev_mu = -1;
  for (const Fiber& f : atlas.fibers) {
    demand(f.mu_idx > prev_mu, "fibers are not sorted by rootlet index");
    prev_mu = f.mu_idx;
    demand(rs.is_long[f.mu_idx], "fiber rootlet " + rstr(rs, f.mu_idx) + " is short");
    demand(!f.members.empty() && std::is_sorted(f.members.begin(), f.members.end()), "fiber members are not sorted");
    demand(&atlas.fiber(rs, f.mu_idx) == &f, "fiber lookup is inconsistent");
    const RootSet& lo = atlas.mu_min(rs, f.mu_idx).roots;
    const RootSet& hi = atlas.mu_max(rs, f.mu_idx).roots;
    for (int id : f.members) {
      const AbelianIdeal& I = atlas.ideals[id];
      demand(I.rootlet_idx && *I.rootlet_idx == f.mu_idx, "member " + std::to_string(id) + " has a different rootlet");
      demand(lo.subset_of(I.roots) && I.roots.subset_of(hi),
             "member " + std::to_string(id) + " is not between the fiber extremes");
    }
    total += f.members.size();
  }
  demand(total == atlas.ideals.size() - 1, "fibers do not partition the nonzero ideals");
  r.details = std::to_string(atlas.fibers.size()) + " fibers over "
      + std::to_string(atlas.ideals.size() - 1) + " nonzero ideals";
}

// Every member of a fiber meets H in exactly the least member, which lies in H.
void check_fiber_h_trace(Ctx& c, CheckResult&) {
  const RootSystem& rs = c.rs;
  RootSet H = RootSet::of(rs.h_set);
  for (const Fiber& f : c.atlas.fibers) {
    const RootSet& lo = c.atlas.mu_min(rs, f.mu_idx).roots;
    demand(lo.subset_of(H), "least ideal over " + rstr(rs, f.mu_idx) + " leaves H");
    for (int id : f.members)
      demand((c.atlas.ideals[id].roots & H) == lo,
             "ideal " + std::to_string(id) + " meets H in something other than the fiber minimum");
  }
}

// An ideal lies inside H exactly when it is the least member of its fiber.
void check_h_minima(Ctx& c, CheckResult&) {
  const RootSystem& rs = c.rs;
  RootSet H = RootSet::of(rs.h_set);
  for (size_t id = 1; id < c.atlas.ideals.size(); ++id) {
    const AbelianIdeal& I = c.atlas.ideals[id];
    bool in_h = I.roots.subset_of(H);
    bool least = c.atlas.fiber(rs, *I.rootlet_idx).min_id == static_cast<int>(id);
    demand(in_h == least, "ideal " + std::to_string(id) + ": inside-H = " + (in_h ? "yes" : "no")
           + " but fiber-minimum = " + (least ? "yes" : "no"));
  }
}

// mu <= nu forces the fiber extremes over nu inside those over mu, and the
// fiber over nu to be no larger.
void check_minima_antitone(Ctx& c, CheckResult&) {
  const RootSystem& rs = c.rs;
  for (int a : rs.long_pos)
    for (int b : rs.long_pos)
      if (a != b && rs.root_leq(a, b))
        demand(c.atlas.mu_min(rs, b).roots.subset_of(c.atlas.mu_min(rs, a).roots),
               "least ideals are not antitone at " + rstr(rs, a) + " <= " + rstr(rs, b));
}

void check_maxima_antitone(Ctx& c, CheckResult&) {
  const RootSystem& rs = c.rs;
  for (int a : rs.long_pos)
    for (int b : rs.long_pos)
      if (a != b && rs.root_leq(a, b))
        demand(c.atlas.mu_max(rs, b).roots.subset_of(c.atlas.mu_max(rs, a).roots),
               "greatest ideals are not antitone at " + rstr(rs, a) + " <= " + rstr(rs, b));
}

void check_fiber_size_antitone(Ctx& c, CheckResult&) {
  const RootSystem& rs = c.rs;
  for (int a : rs.long_pos)
    for (int b : rs.long_pos)
      if (a != b && rs.root_leq(a, b))
        demand(c.atlas.fiber(rs, b).members.size() <= c.atlas.fiber(rs, a).members.size(),
               "fiber sizes are not antitone at " + rstr(rs, a) + " <= " + rstr(rs, b));
}

// ---------------------------------------------------------------------------
// intersections
// ---------------------------------------------------------------------------

// The intersection of two nonzero ideals is an ideal whose rootlet is the
// join of the two rootlets.
void check_intersection_rootlet(Ctx& c, CheckResult& r) {
  const Atlas& atlas = c.atlas;
  size_t n = atlas.ideals.size(), pairs = 0;
  for (size_t i = 1; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      RootSet k = atlas.ideals[i].roots & atlas.ideals[j].roots;
      int kid = atlas.id_for(k);
      demand(kid > 0, "intersection of ideals " + std::to_string(i) + " and " + std::to_string(j)
             + " is not a nonzero ideal");
      int expect = c.join_idx(*atlas.ideals[i].rootlet_idx, *atlas.ideals[j].rootlet_idx);
      demand(*atlas.ideals[kid].rootlet_idx == expect,
             "rootlet of the intersection of ideals " + std::to_string(i) + " and " + std::to_string(j)
             + " is " + rstr(c.rs, *atlas.ideals[kid].rootlet_idx) + ", join gives " + rstr(c.rs, expect));
      ++pairs;
    }
  r.details = std::to_string(pairs) + " pairs";
}

// Fiber extremes intersect to the extremes of the join fiber.
void check_intersection_min_max(Ctx& c, CheckResult&) {
  const RootSystem& rs = c.rs;
  for (size_t a = 0; a < rs.long_pos.size(); ++a)
    for (size_t b = a + 1; b < rs.long_pos.size(); ++b) {
      int i = rs.long_pos[a], j = rs.long_pos[b];
      int k = c.join_idx(i, j);
      demand((c.atlas.mu_min(rs, i).roots & c.atlas.mu_min(rs, j).roots) == c.atlas.mu_min(rs, k).roots,
             "least ideals over " + rstr(rs, i) + " and " + rstr(rs, j) + " do not meet in the least ideal over the join");
      demand((c.atlas.mu_max(rs, i).roots & c.atlas.mu_max(rs, j).roots) == c.atlas.mu_max(rs, k).roots,
             "greatest ideals over " + rstr(rs, i) + " and " + rstr(rs, j) + " do not meet in the greatest ideal over the join");
    }
}

// Every ideal over the join arises as such an intersection; witnessed
// constructively by descending chains from the join fiber.
void check_intersection_surjective(Ctx& c, CheckResult& r) {
  const RootSystem& rs = c.rs;
  size_t witnesses = 0;
  for (size_t a = 0; a < rs.long_pos.size(); ++a)
    for (size_t b = a + 1; b < rs.long_pos.size(); ++b) {
      int i = rs.long_pos[a], j = rs.long_pos[b];
      const Fiber& f = c.atlas.fiber(rs, c.join_idx(i, j));
      std::vector<int> sample;
      if (rs.rank <= 6 || f.members.size() <= 4) {
        sample = f.members;
      } else {
        sample = {f.members.front(), f.members[f.members.size() / 2], f.members.back(), f.min_id, f.max_id};
        std::sort(sample.begin(), sample.end());
        sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
      }
      for (int kid : sample) {
        const AbelianIdeal& K = c.atlas.ideals[kid];
        AbelianIdeal I = chain_to(rs, K, rs.positive[i]);
        AbelianIdeal J = chain_to(rs, K, rs.positive[j]);
        demand(rootlet(rs, I) == i && rootlet(rs, J) == j,
               "descending chain from ideal " + std::to_string(kid) + " missed its target rootlet");
        demand((I.roots & J.roots) == K.roots,
               "chains from ideal " + std::to_string(kid) + " to " + rstr(rs, i) + " and " + rstr(rs, j)
               + " do not meet back in it");
        ++witnesses;
      }
    }
  r.details = std::to_string(witnesses) + " witnesses";
}

// ---------------------------------------------------------------------------
// greatest fiber members and maximal ideals
// ---------------------------------------------------------------------------

// The greatest ideal over mu sits inside the principal upper set of mu, with
// equality throughout families A and C.
void check_mu_max_principal(Ctx& c, CheckResult&) {
  const RootSystem& rs = c.rs;
  bool want_equal = rs.type.family == Family::A || rs.type.family == Family::C;
  for (const Fiber& f : c.atlas.fibers) {
    RootSet pu = rs.principal_upper(f.mu_idx);
    const RootSet& hi = c.atlas.mu_max(rs, f.mu_idx).roots;
    demand(hi.subset_of(pu), "greatest ideal over " + rstr(rs, f.mu_idx) + " leaves the principal upper set");
    if (want_equal)
      demand(hi == pu, "greatest ideal over " + rstr(rs, f.mu_idx) + " is a proper subset of the principal upper set");
  }
}

// (mu, theta) != 0 forces a singleton fiber; the status of the converse is
// reported per type rather than asserted.
void check_fiber_singleton(Ctx& c, CheckResult& r) {
  const RootSystem& rs = c.rs;
  std::vector<std::string> orth;
  bool converse = true;
  for (const Fiber& f : c.atlas.fibers) {
    bool meets = rs.in_h[f.mu_idx];
    if (meets) {
      demand(f.members.size() == 1, "fiber over " + rstr(rs, f.mu_idx) + " has "
             + std::to_string(f.members.size()) + " members despite (mu, theta) != 0");
    } else {
      orth.push_back(rstr(rs, f.mu_idx) + " -> " + std::to_string(f.members.size()));
      if (f.members.size() == 1) converse = false;
    }
  }
  if (orth.empty()) {
    r.details = "no long roots orthogonal to theta";
    return;
  }
  r.status = CheckStatus::reported;
  std::ostringstream os;
  os << "fiber sizes over the theta-orthogonal long roots: ";
  for (size_t i = 0; i < orth.size(); ++i) os << (i ? "; " : "") << orth[i];
  os << (converse ? " (all larger than one: singleton <-> (mu, theta) != 0 here)"
                  : " (a singleton among them: the converse fails here)");
  r.details = os.str();
}

// The maximal ideals are exactly the greatest fiber members over the long
// simple roots.
void check_maximal_ideals(Ctx& c, CheckResult& r) {
  const RootSystem& rs = c.rs;
  demand(c.atlas.maximal.size() == rs.simple_long.size(),
         "expected " + std::to_string(rs.simple_long.size()) + " maximal ideals, found "
         + std::to_string(c.atlas.maximal.size()));
  std::set<RootSet> maxima;
  for (int id : c.atlas.maximal) {
    const AbelianIdeal& I = c.atlas.ideals[id];
    demand(rs.height(rs.positive[*I.rootlet_idx]) == 1, "maximal ideal " + std::to_string(id) + " has a non-simple rootlet");
    maxima.insert(I.roots);
  }
  std::set<RootSet> tops;
  for (int a : rs.simple_long) tops.insert(c.atlas.mu_max(rs, rs.simple_pos_idx[a]).roots);
  demand(maxima == tops, "maximal ideals are not the greatest fiber members over the long simple roots");
  r.details = std::to_string(maxima.size()) + " maximal ideals";
}

// ---------------------------------------------------------------------------
// the join
// ---------------------------------------------------------------------------

void check_join_formula(Ctx& c, CheckResult& r) {
  const RootSystem& rs = c.rs;
  size_t pairs = 0;
  for (int i = 0; i < c.npos(); ++i)
    for (int j = i + 1; j < c.npos(); ++j) {
      JoinResult jr = join(rs, rs.positive[i], rs.positive[j]);
      demand(jr.value == join_oracle(rs, rs.positive[i], rs.positive[j]),
             "closed form and least-upper-bound scan disagree at (" + rstr(rs, i) + ", " + rstr(rs, j) + ")");
      if (jr.mode == JoinMode::comparable)
        demand(jr.value == (rs.root_leq(i, j) ? rs.positive[j] : rs.positive[i]),
               "comparable join is not the larger root at (" + rstr(rs, i) + ", " + rstr(rs, j) + ")");
      ++pairs;
    }
  r.details = std::to_string(pairs) + " pairs";
}

void check_join_long_closure(Ctx& c, CheckResult&) {
  const RootSystem& rs = c.rs;
  for (size_t a = 0; a < rs.long_pos.size(); ++a)
    for (size_t b = a + 1; b < rs.long_pos.size(); ++b) {
      int k = c.join_idx(rs.long_pos[a], rs.long_pos[b]);
      demand(rs.is_long[k], "join of long roots " + rstr(rs, rs.long_pos[a]) + " and "
             + rstr(rs, rs.long_pos[b]) + " is the short root " + rstr(rs, k));
    }
}

// Principal upper sets intersect to the principal upper set of the join.
void check_join_principal(Ctx& c, CheckResult&) {
  const RootSystem& rs = c.rs;
  std::vector<RootSet> pu(c.npos());
  for (int i = 0; i < c.npos(); ++i) pu[i] = rs.principal_upper(i);
  for (int i = 0; i < c.npos(); ++i)
    for (int j = i + 1; j < c.npos(); ++j)
      demand((pu[i] & pu[j]) == pu[c.join_idx(i, j)],
             "upper sets of " + rstr(rs, i) + " and " + rstr(rs, j) + " do not meet in the upper set of the join");
}

void check_join_algebra(Ctx& c, CheckResult& r) {
  const RootSystem& rs = c.rs;
  for (int i = 0; i < c.npos(); ++i)
    demand(join(rs, rs.positive[i], rs.positive[i]).value == rs.positive[i], "join is not idempotent at " + rstr(rs, i));
  for (int i = 0; i < c.npos(); ++i)
    for (int j = i + 1; j < c.npos(); ++j)
      demand(join(rs, rs.positive[i], rs.positive[j]).value == join(rs, rs.positive[j], rs.positive[i]).value,
             "join is not commutative at (" + rstr(rs, i) + ", " + rstr(rs, j) + ")");
  std::mt19937 rng(c.opt.seed);
  std::uniform_int_distribution<int> pick(0, c.npos() - 1);
  const int triples = 100;
  for (int t = 0; t < triples; ++t) {
    int a = pick(rng), b = pick(rng), d = pick(rng);
    demand(c.join_idx(c.join_idx(a, b), d) == c.join_idx(a, c.join_idx(b, d)),
           "join is not associative at (" + rstr(rs, a) + ", " + rstr(rs, b) + ", " + rstr(rs, d) + ")");
  }
  r.details = std::to_string(triples) + " associativity triples";
}

// Least fiber members intersect to an ideal whose rootlet is the join.
void check_join_rootlet_consistency(Ctx& c, CheckResult&) {
  const RootSystem& rs = c.rs;
  for (size_t a = 0; a < rs.long_pos.size(); ++a)
    for (size_t b = a + 1; b < rs.long_pos.size(); ++b) {
      int i = rs.long_pos[a], j = rs.long_pos[b];
      int kid = c.atlas.id_for(c.atlas.mu_min(rs, i).roots & c.atlas.mu_min(rs, j).roots);
      demand(kid > 0, "least ideals over " + rstr(rs, i) + " and " + rstr(rs, j) + " do not meet in an ideal");
      demand(*c.atlas.ideals[kid].rootlet_idx == c.join_idx(i, j),
             "rootlet of the meet of least ideals over " + rstr(rs, i) + " and " + rstr(rs, j) + " is not the join");
    }
}

// Every nonempty coefficient slice has unique extremes and is join-closed.
void check_delta_slices(Ctx& c, CheckResult& r) {
  const RootSystem& rs = c.rs;
  size_t slices = 0;
  for (int a = 0; a < rs.rank; ++a)
    for (int i = 1; i <= rs.theta[a]; ++i) {
      DeltaSlice s = delta_slice(rs, a, i);
      demand(!s.members.empty(), "slice at simple root " + std::to_string(a + 1) + ", coefficient "
             + std::to_string(i) + " is empty");
      demand(s.min_idx >= 0 && s.max_idx >= 0, "slice extremes missing at simple root " + std::to_string(a + 1)
             + ", coefficient " + std::to_string(i));
      demand(s.join_closed, "slice at simple root " + std::to_string(a + 1) + ", coefficient "
             + std::to_string(i) + " is not join-closed");
      ++slices;
    }
  r.details = std::to_string(slices) + " slices";
}

// The union of the maximal ideals is everything except in family A, and its
// complement then has the unique maximum [theta/2].
void check_commutative_roots(Ctx& c, CheckResult& r) {
  const RootSystem& rs = c.rs;
  RootSet com = commutative_roots(rs, c.atlas);
  RootSet rest = RootSet::full(c.npos()) - com;
  if (rs.type.family == Family::A) {
    demand(rest.empty(), "family A left " + std::to_string(rest.count()) + " roots outside every maximal ideal");
    r.details = "every root lies in a maximal ideal";
    return;
  }
  demand(!rest.empty(), "no roots outside the maximal ideals");
  std::vector<int> tops = maximal_elements(rs, rest);
  demand(tops.size() == 1 && rs.positive[tops[0]] == rs.half_floor(rs.theta),
         "complement of the commutative roots does not peak at [theta/2]");
  r.details = std::to_string(rest.count()) + " non-commutative roots, maximum [theta/2] = " + rstr(rs, tops[0]);
}

// ---------------------------------------------------------------------------
// centralisers
// ---------------------------------------------------------------------------

void check_centraliser_criteria(Ctx& c, CheckResult&) {
  for (size_t id = 1; id < c.atlas.ideals.size(); ++id) {
    ClassifyReport rep = classify(c.rs, c.atlas, c.atlas.ideals[id].roots);
    if (!rep.mismatches.empty())
      bail("ideal " + std::to_string(id) + ": " + rep.mismatches.front());
    demand((!rep.profile.p3 || rep.profile.p2) && (!rep.profile.p2 || rep.profile.p1),
           "property chain broken at ideal " + std::to_string(id));
  }
}

void check_self_centralising(Ctx& c, CheckResult& r) {
  size_t n_self = 0;
  for (size_t id = 0; id < c.atlas.ideals.size(); ++id) {
    bool self = self_centralising(c.rs, c.atlas.ideals[id].roots);
    bool maximal = std::find(c.atlas.maximal.begin(), c.atlas.maximal.end(), static_cast<int>(id)) != c.atlas.maximal.end();
    demand(self == maximal, "ideal " + std::to_string(id) + " is " + (self ? "" : "not ")
           + "self-centralising but " + (maximal ? "" : "not ") + "maximal");
    n_self += self;
  }
  r.details = std::to_string(n_self) + " self-centralising ideals";
}

// A centraliser that is itself an abelian ideal is the greatest member of the
// rootlet's fiber.
void check_p3_structure(Ctx& c, CheckResult&) {
  for (size_t id = 1; id < c.atlas.ideals.size(); ++id) {
    const AbelianIdeal& I = c.atlas.ideals[id];
    CentraliserProfile p = centraliser(c.rs, I.roots);
    if (p.p3)
      demand(p.pos == c.atlas.mu_max(c.rs, *I.rootlet_idx).roots,
             "centraliser of ideal " + std::to_string(id) + " is an ideal but not the greatest one over its rootlet");
  }
}

void check_unique_container(Ctx& c, CheckResult&) {
  const RootSystem& rs = c.rs;
  for (size_t id = 1; id < c.atlas.ideals.size(); ++id) {
    const AbelianIdeal& I = c.atlas.ideals[id];
    std::optional<int> u = unique_container(rs, c.atlas, I.roots);
    if (rs.simply_laced()) {
      bool simple_rt = rs.height(rs.positive[*I.rootlet_idx]) == 1;
      demand(u.has_value() == simple_rt, "ideal " + std::to_string(id) + ": unique container "
             + (u ? "exists" : "missing") + " but the rootlet is " + (simple_rt ? "" : "not ") + "simple");
    }
  }
}

// ---------------------------------------------------------------------------
// the theta-complement pairing
// ---------------------------------------------------------------------------

void check_theta_pairing(Ctx& c, CheckResult& r) {
  const RootSystem& rs = c.rs;
  for (int a : rs.simple_long) {
    PairingReport rep = stunning_pairs(rs, c.atlas, a);
    demand(rep.ok, "pairing at simple root " + std::to_string(a + 1) + ": "
           + (rep.failures.empty() ? "failed" : rep.failures.front()));
    if (!rep.degenerate_theta)
      for (auto [nu, comp] : rep.pairs)
        demand(vec_add(rs.positive[nu], rs.positive[comp]) == rs.theta,
               "pair at simple root " + std::to_string(a + 1) + " does not sum to theta");
  }
  r.details = std::to_string(rs.simple_long.size()) + " long simple roots";
}

void check_sigma_pairing(Ctx& c, CheckResult& r) {
  const RootSystem& rs = c.rs;
  const std::vector<int>& L = rs.simple_long;
  size_t checked = 0;
  for (unsigned mask = 1; mask < (1u << L.size()); ++mask) {
    std::vector<int> sigma;
    for (size_t b = 0; b < L.size(); ++b)
      if (mask >> b & 1) sigma.push_back(L[b]);
    if (!rs.connected(sigma)) continue;
    PairingReport rep = sigma_pairs(rs, c.atlas, sigma);
    std::string label = "sigma of size " + std::to_string(sigma.size()) + " at simple root "
        + std::to_string(sigma.front() + 1);
    demand(rep.ok, label + ": " + (rep.failures.empty() ? "failed" : rep.failures.front()));
    if (!rep.degenerate_theta)
      demand(rep.left.size() == rep.right.size() && rep.pairs.size() == rep.left.size(),
             label + ": the two sides do not match up");
    ++checked;
  }
  r.details = std::to_string(checked) + " connected subsets";
}

// The four-column table over the eighth type E: checked bit-for-bit against
// the frozen rows, in display numbering.
void check_table1(Ctx& c, CheckResult& r) {
  const RootSystem& rs = c.rs;
  demand(is_e8(rs), "four-column table is defined for E8 only");
  static const struct {
    int block;
    const char *max_min, *min_min, *comp_max;
  } frozen[] = {
      {1, "12222101", "12222101", "11234322"},
      {2, "12222111", "12222111", "11234312"},
      {2, "01234322", "11234322", "12222101"},
      {3, "12222211", "12222211", "11234212"},
      {3, "01234312", "11234312", "12222111"},
      {4, "12223211", "12223211", "11233212"},
      {4, "01234212", "11234212", "12222211"},
      {5, "12223212", "12223212", "11233211"},
      {5, "12233211", "12233211", "11223212"},
      {5, "01233212", "11233212", "12223211"},
      {6, "12333211", "12333211", "11123212"},
      {6, "01223212", "11223212", "12233211"},
      {7, "00123212", "11123212", "12333211"},
      {8, "01233211", "11233211", "12223212"},
  };
  std::vector<Table1Row> rows = table1(rs, c.atlas, Numbering::paper);
  demand(rows.size() == std::size(frozen), "expected " + std::to_string(std::size(frozen))
         + " rows, generated " + std::to_string(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    const Table1Row& row = rows[i];
    bool ok = row.block == frozen[i].block
        && rs.digit_string(row.max_min, Numbering::paper) == frozen[i].max_min
        && rs.digit_string(row.min_min, Numbering::paper) == frozen[i].min_min
        && rs.digit_string(row.comp_max, Numbering::paper) == frozen[i].comp_max;
    demand(ok, "row " + std::to_string(i + 1) + " differs from the frozen table: got block "
           + std::to_string(row.block) + ", " + rs.digit_string(row.max_min, Numbering::paper) + ", "
           + rs.digit_string(row.min_min, Numbering::paper) + ", "
           + rs.digit_string(row.comp_max, Numbering::paper));
  }
  r.details = std::to_string(rows.size()) + " rows match";
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

struct Entry {
  const char* name;
  void (*fn)(Ctx&, CheckResult&);
  bool e8_only;
};

const Entry kRegistry[] = {
    {"root-facts", check_root_facts, false},
    {"half-floor", check_half_floor, false},
    {"pi-l-min", check_pi_l_min, false},
    {"theta-pi-l", check_theta_pi_l, false},
    {"affine-action", check_affine_action, false},
    {"minuscule-norm", check_minuscule_norm, false},
    {"cardinality", check_cardinality, false},
    {"oracle-equivalence", check_oracle_equivalence, false},
    {"z-bijection", check_z_bijection, false},
    {"z-mu-minimal", check_z_mu_minimal, false},
    {"size-formula", check_size_formula, false},
    {"fiber-structure", check_fiber_structure, false},
    {"fiber-h-trace", check_fiber_h_trace, false},
    {"h-minima", check_h_minima, false},
    {"minima-antitone", check_minima_antitone, false},
    {"maxima-antitone", check_maxima_antitone, false},
    {"fiber-size-antitone", check_fiber_size_antitone, false},
    {"intersection-rootlet", check_intersection_rootlet, false},
    {"intersection-min-max", check_intersection_min_max, false},
    {"intersection-surjective", check_intersection_surjective, false},
    {"mu-max-principal", check_mu_max_principal, false},
    {"fiber-singleton", check_fiber_singleton, false},
    {"maximal-ideals", check_maximal_ideals, false},
    {"join-formula", check_join_formula, false},
    {"join-long-closure", check_join_long_closure, false},
    {"join-principal", check_join_principal, false},
    {"join-algebra", check_join_algebra, false},
    {"join-rootlet-consistency", check_join_rootlet_consistency, false},
    {"delta-slices", check_delta_slices, false},
    {"commutative-roots", check_commutative_roots, false},
    {"centraliser-criteria", check_centraliser_criteria, false},
    {"self-centralising", check_self_centralising, false},
    {"p3-structure", check_p3_structure, false},
    {"unique-container", check_unique_container, false},
    {"theta-pairing", check_theta_pairing, false},
    {"sigma-pairing", check_sigma_pairing, false},
    {"table1", check_table1, true},
};

}  // namespace

bool TypeReport::all_ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

int default_brute_cap() {
  const char* env = std::getenv("ROOTLET_LAB_MAX_RANK");
  if (!env || !*env) return 6;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0 || v > 8) return 6;
  return static_cast<int>(v);
}

bool glob_match(const std::string& pattern, const std::string& text) {
  size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p, ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<std::string> check_names(CartanType type) {
  std::vector<std::string> out;
  bool e8 = type.family == Family::E && type.rank == 8;
  for (const Entry& e : kRegistry)
    if (!e.e8_only || e8) out.emplace_back(e.name);
  return out;
}

TypeReport run_checks(CartanType type, const VerifyOptions& opt) {
  TypeReport report;
  report.type = type;
  RootSystem rs = RootSystem::build(type);
  Atlas atlas = enumerate_ideals(rs);
  Ctx ctx{rs, atlas, opt, {}};
  bool e8 = type.family == Family::E && type.rank == 8;
  for (const Entry& e : kRegistry) {
    if (e.e8_only && !e8) continue;
    if (!glob_match(opt.filter, e.name)) continue;
    CheckResult res;
    res.name = e.name;
    try {
      e.fn(ctx, res);
    } catch (const std::exception& ex) {
      res.status = CheckStatus::fail;
      res.details = ex.what();
    }
    report.checks.push_back(std::move(res));
  }
  return report;
}

const char* status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::reported: return "reported";
  }
  return "?";
}

}  // namespace rootlet
