#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "rootlet/verify.hpp"

using namespace rootlet;

namespace {

const CheckResult* find_check(const TypeReport& rep, const std::string& name) {
  for (const CheckResult& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

int fail_count(const TypeReport& rep) {
  int n = 0;
  for (const CheckResult& c : rep.checks) n += c.status == CheckStatus::fail;
  return n;
}

}  // namespace

TEST_CASE("glob matching") {
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("*", ""));
  CHECK(glob_match("join-formula", "join-formula"));
  CHECK_FALSE(glob_match("join-formula", "join-formulae"));
  CHECK(glob_match("join-*", "join-formula"));
  CHECK(glob_match("join-*", "join-long-closure"));
  CHECK_FALSE(glob_match("join-*", "z-bijection"));
  CHECK(glob_match("*-antitone", "minima-antitone"));
  CHECK(glob_match("*-antitone", "fiber-size-antitone"));
  CHECK_FALSE(glob_match("*-antitone", "fiber-structure"));
  CHECK(glob_match("?-bijection", "z-bijection"));
  CHECK_FALSE(glob_match("?-bijection", "zz-bijection"));
  CHECK(glob_match("*table*", "table1"));
  CHECK(glob_match("**", "x"));
  CHECK_FALSE(glob_match("", "x"));
  CHECK(glob_match("", ""));
}

TEST_CASE("registry names") {
  std::vector<std::string> a3 = check_names(CartanType::parse("A3"));
  CHECK(a3.size() == 36);
  CHECK(a3.front() == "root-facts");
  CHECK(a3.back() == "sigma-pairing");
  CHECK(std::find(a3.begin(), a3.end(), "table1") == a3.end());
  CHECK(std::find(a3.begin(), a3.end(), "cardinality") != a3.end());

  std::vector<std::string> e8 = check_names(CartanType::parse("E8"));
  CHECK(e8.size() == 37);
  CHECK(e8.back() == "table1");

  // names are unique
  std::vector<std::string> sorted = e8;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("full battery is green on small types") {
  VerifyOptions opt;
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "F4", "G2"}) {
    CAPTURE(name);
    TypeReport rep = run_checks(CartanType::parse(name), opt);
    CHECK(rep.checks.size() == 36);
    CHECK(rep.all_ok());
    CHECK(fail_count(rep) == 0);
    for (const CheckResult& c : rep.checks) {
      CAPTURE(c.name);
      CAPTURE(c.details);
      CHECK(c.status != CheckStatus::fail);
    }
  }
}

TEST_CASE("rank six still runs the enumeration oracle") {
  VerifyOptions opt;
  TypeReport rep = run_checks(CartanType::parse("E6"), opt);
  CHECK(rep.all_ok());
  const CheckResult* oracle = find_check(rep, "oracle-equivalence");
  REQUIRE(oracle);
  CHECK(oracle->status == CheckStatus::pass);
  CHECK(oracle->details == "matched 64 sets");
}

TEST_CASE("the oracle is gated by the cap") {
  VerifyOptions opt;
  opt.brute_cap = 1;
  TypeReport rep = run_checks(CartanType::parse("B2"), opt);
  CHECK(rep.all_ok());
  const CheckResult* oracle = find_check(rep, "oracle-equivalence");
  REQUIRE(oracle);
  CHECK(oracle->status == CheckStatus::reported);
  CHECK(oracle->details.find("skipped") != std::string::npos);
  CHECK(oracle->details.find("cap 1") != std::string::npos);
}

TEST_CASE("singleton-fiber statuses") {
  VerifyOptions opt;
  opt.filter = "fiber-singleton";

  // theta pairs with every long root in A2: nothing to report
  TypeReport a2 = run_checks(CartanType::parse("A2"), opt);
  REQUIRE(a2.checks.size() == 1);
  CHECK(a2.checks[0].status == CheckStatus::pass);
  CHECK(a2.checks[0].details == "no long roots orthogonal to theta");

  // alpha1 is orthogonal to theta in B2 and its fiber has two members
  TypeReport b2 = run_checks(CartanType::parse("B2"), opt);
  REQUIRE(b2.checks.size() == 1);
  CHECK(b2.checks[0].status == CheckStatus::reported);
  CHECK(b2.checks[0].details.find("1,0 -> 2") != std::string::npos);
  CHECK(b2.checks[0].details.find("converse fails") == std::string::npos);

  // the C-family counterexample root
  TypeReport c3 = run_checks(CartanType::parse("C3"), opt);
  REQUIRE(c3.checks.size() == 1);
  CHECK(c3.checks[0].status == CheckStatus::reported);
  CHECK(c3.checks[0].details.find("0,2,1 -> 2") != std::string::npos);
}

TEST_CASE("filtering runs exactly the matching checks") {
  VerifyOptions opt;
  opt.filter = "join-*";
  TypeReport rep = run_checks(CartanType::parse("B3"), opt);
  std::vector<std::string> names;
  for (const CheckResult& c : rep.checks) names.push_back(c.name);
  CHECK(names == std::vector<std::string>{"join-formula", "join-long-closure", "join-principal",
                                          "join-algebra", "join-rootlet-consistency"});
  CHECK(rep.all_ok());

  opt.filter = "no-such-check";
  CHECK(run_checks(CartanType::parse("A1"), opt).checks.empty());
}

TEST_CASE("pass details carry counts") {
  VerifyOptions opt;
  TypeReport rep = run_checks(CartanType::parse("B2"), opt);
  const CheckResult* card = find_check(rep, "cardinality");
  REQUIRE(card);
  CHECK(card->details == "4 ideals");
  const CheckResult* jf = find_check(rep, "join-formula");
  REQUIRE(jf);
  CHECK(jf->details == "6 pairs");  // C(4,2)
  const CheckResult* mx = find_check(rep, "maximal-ideals");
  REQUIRE(mx);
  CHECK(mx->details == "1 maximal ideals");
}

TEST_CASE("environment cap parsing") {
  unsetenv("ROOTLET_LAB_MAX_RANK");
  CHECK(default_brute_cap() == 6);
  setenv("ROOTLET_LAB_MAX_RANK", "4", 1);
  CHECK(default_brute_cap() == 4);
  setenv("ROOTLET_LAB_MAX_RANK", "0", 1);
  CHECK(default_brute_cap() == 0);
  setenv("ROOTLET_LAB_MAX_RANK", "8", 1);
  CHECK(default_brute_cap() == 8);
  setenv("ROOTLET_LAB_MAX_RANK", "banana", 1);
  CHECK(default_brute_cap() == 6);
  setenv("ROOTLET_LAB_MAX_RANK", "12", 1);
  CHECK(default_brute_cap() == 6);
  unsetenv("ROOTLET_LAB_MAX_RANK");
}

TEST_CASE("status words") {
  CHECK(std::string(status_word(CheckStatus::pass)) == "pass");
  CHECK(std::string(status_word(CheckStatus::fail)) == "FAIL");
  CHECK(std::string(status_word(CheckStatus::reported)) == "reported");
}
