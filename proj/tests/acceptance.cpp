// Acceptance battery: runs the full check registry over every irreducible
// type of rank <= 8 and condenses the results into eleven criterion lines.
// Exit status is zero exactly when criteria 1-10 hold; criterion 11 is a
// per-type status report and never fails the run.
#include <algorithm>
#include <future>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "rootlet/verify.hpp"

using namespace rootlet;

namespace {

struct Criterion {
  int num;
  std::string summary;
  std::vector<std::string> checks;
};

}  // namespace

int main() {
  std::vector<CartanType> types = all_types_up_to_rank8();
  VerifyOptions opt;
  opt.brute_cap = 6;  // the oracle range is part of the contract; ignore the env here

  std::vector<std::future<TypeReport>> futures;
  futures.reserve(types.size());
  for (CartanType t : types)
    futures.push_back(std::async(std::launch::async, [t, opt] { return run_checks(t, opt); }));
  std::vector<TypeReport> reports;
  reports.reserve(types.size());
  for (auto& f : futures) reports.push_back(f.get());

  const std::vector<Criterion> criteria = {
      {1, "2^rank abelian ideals in every type", {"cardinality"}},
      {2, "enumeration matches the brute-force oracle at rank <= 6",
       {"oracle-equivalence"}},
      {3, "z vectors biject with the pairing grid; z = rootlet coroot exactly at fiber minima",
       {"z-bijection", "z-mu-minimal"}},
      {4, "size of the least fiber member follows the level formula", {"size-formula"}},
      {5, "closed-form join equals the oracle; long roots are join-closed; coefficient slices are lattices",
       {"join-formula", "join-long-closure", "delta-slices"}},
      {6, "ideal intersections: rootlets join, fiber extremes meet, and every member is witnessed",
       {"intersection-rootlet", "intersection-min-max", "intersection-surjective"}},
      {7, "fibers trace H through their minima; greatest members sit under principal upper sets",
       {"fiber-h-trace", "h-minima", "mu-max-principal"}},
      {8, "centraliser properties P1/P2/P3 match their closed-form criteria",
       {"centraliser-criteria", "self-centralising"}},
      {9, "theta-complement pairings hold everywhere; the E8 four-column table is bit-exact",
       {"theta-pairing", "sigma-pairing", "table1"}},
      {10, "half-floor root splittings and the commutative-root complement peak",
       {"root-facts", "half-floor", "pi-l-min", "commutative-roots"}},
  };

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    bool ok = true;
    std::string why;
    for (const std::string& name : c.checks) {
      size_t seen = 0;
      for (const TypeReport& rep : reports) {
        for (const CheckResult& ch : rep.checks) {
          if (ch.name != name) continue;
          ++seen;
          bool fine = ch.status == CheckStatus::pass;
          if (name == "oracle-equivalence" && rep.type.rank > opt.brute_cap)
            fine = ch.status != CheckStatus::fail;  // skipped above the documented range
          if (!fine && ok) {
            ok = false;
            why = rep.type.name() + " " + name + (ch.details.empty() ? "" : ": " + ch.details);
          }
        }
      }
      size_t need = name == "table1" ? 1 : types.size();
      if (seen < need && ok) {
        ok = false;
        why = name + " ran " + std::to_string(seen) + " times, expected " + std::to_string(need);
      }
    }
    all_pass = all_pass && ok;
    std::cout << "criterion " << std::setw(2) << c.num << ": " << (ok ? "pass" : "FAIL") << "  "
              << c.summary;
    if (!ok) std::cout << "  [" << why << "]";
    std::cout << "\n";
  }

  // criterion 11: the converse of "(mu, theta) != 0 => singleton fiber" as a
  // per-type survey; the forward implication is asserted inside the check.
  bool c11_broken = false;
  for (const TypeReport& rep : reports)
    for (const CheckResult& ch : rep.checks)
      if (ch.name == "fiber-singleton" && ch.status == CheckStatus::fail) c11_broken = true;
  all_pass = all_pass && !c11_broken;
  std::cout << "criterion 11: " << (c11_broken ? "FAIL" : "reported")
            << "  singleton fibers against (mu, theta) = 0, surveyed by type\n";
  for (const TypeReport& rep : reports) {
    const CheckResult* fs = nullptr;
    for (const CheckResult& ch : rep.checks)
      if (ch.name == "fiber-singleton") fs = &ch;
    std::cout << "  " << std::left << std::setw(3) << rep.type.name() << " "
              << (fs ? fs->details : std::string("missing"));
    bool c_flag = rep.type.family == Family::C || (rep.type.family == Family::B && rep.type.rank == 2);
    if (c_flag) std::cout << " [theta is orthogonal to the sum of the long simple roots]";
    std::cout << "\n";
  }

  std::cout << (all_pass ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << " (" << types.size()
            << " types)\n";
  return all_pass ? 0 : 1;
}
