#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rootlet/rootsys.hpp"

using namespace rootlet;

static RootSystem make(const char* name) { return RootSystem::build(CartanType::parse(name)); }

TEST_CASE("type parsing accepts the full battery and rejects junk") {
  for (const char* s : {"A1", "a5", "B2", "C8", "D4", "E6", "E7", "E8", "F4", "G2"})
    CHECK_NOTHROW(CartanType::parse(s));
  for (const char* s : {"", "A", "A0", "B1", "C1", "D3", "E5", "E9", "F5", "G3", "H4", "Z9", "B-2", "Bx"})
    CHECK_THROWS_AS(CartanType::parse(s), std::invalid_argument);
  CHECK(CartanType::parse("e8").name() == "E8");
  CHECK(all_types_up_to_rank8().size() == 32);
}

TEST_CASE("positive root counts match the classical formulas") {
  for (CartanType t : all_types_up_to_rank8()) {
    RootSystem rs = RootSystem::build(t);
    CHECK(static_cast<int>(rs.positive.size()) == classical_positive_count(t));
  }
}

TEST_CASE("B2 closure, order, and length data") {
  RootSystem rs = make("B2");
  // height-then-lex order
  REQUIRE(rs.positive.size() == 4);
  CHECK(rs.positive[0] == Root{0, 1});
  CHECK(rs.positive[1] == Root{1, 0});
  CHECK(rs.positive[2] == Root{1, 1});
  CHECK(rs.positive[3] == Root{1, 2});
  CHECK(rs.theta == Root{1, 2});
  // alpha_1 is the long simple root in B2
  CHECK(rs.simple_long == std::vector<int>{0});
  CHECK(rs.is_long[1]);
  CHECK(!rs.is_long[0]);
  CHECK(!rs.is_long[2]);
  CHECK(rs.is_long[3]);
  // H = roots not orthogonal to theta; (alpha_1, theta) = 0 here
  CHECK(rs.h_set == std::vector<int>{0, 2, 3});
  CHECK(rs.bilinear(Root{1, 0}, rs.theta) == Rat(0));
}

TEST_CASE("C2 is the mirrored labeling of B2") {
  RootSystem rs = make("C2");
  CHECK(rs.theta == Root{2, 1});
  CHECK(rs.simple_long == std::vector<int>{1});
  CHECK(rs.bilinear(Root{0, 1}, rs.theta) == Rat(0));
}

TEST_CASE("A2 bilinear form") {
  RootSystem rs = make("A2");
  CHECK(rs.bilinear(Root{1, 0}, Root{0, 1}) == Rat(-1));
  CHECK(rs.bilinear(Root{1, 0}, Root{1, 0}) == Rat(2));
  CHECK(rs.theta == Root{1, 1});
  CHECK(rs.h_set.size() == 3);
}

TEST_CASE("G2 closure and long/short split") {
  RootSystem rs = make("G2");
  REQUIRE(rs.positive.size() == 6);
  CHECK(rs.positive[0] == Root{0, 1});
  CHECK(rs.positive[1] == Root{1, 0});
  CHECK(rs.positive[2] == Root{1, 1});
  CHECK(rs.positive[3] == Root{2, 1});
  CHECK(rs.positive[4] == Root{3, 1});
  CHECK(rs.positive[5] == Root{3, 2});
  CHECK(rs.theta == Root{3, 2});
  // long roots: alpha_2, 3a1+a2, theta
  CHECK(rs.long_pos == std::vector<int>{0, 4, 5});
  CHECK(rs.bilinear(Root{1, 0}, Root{1, 0}) == Rat(2, 3));
  CHECK(rs.h_set.size() == 5);  // only alpha_1 is orthogonal to theta
}

TEST_CASE("coroots are integral and match hand values") {
  RootSystem b2 = make("B2");
  CHECK(b2.coroot(Root{0, 1}) == Root{0, 2});   // short alpha_2
  CHECK(b2.coroot(Root{1, 0}) == Root{1, 0});   // long alpha_1
  CHECK(b2.coroot(b2.theta) == b2.theta);       // theta is long, so theta^vee = theta
  RootSystem g2 = make("G2");
  CHECK(g2.coroot(Root{1, 0}) == Root{3, 0});   // (alpha_1, alpha_1) = 2/3
  CHECK_THROWS_AS(g2.coroot(Root{0, 0}), std::invalid_argument);
}

TEST_CASE("root order and membership") {
  RootSystem rs = make("B2");
  CHECK(rs.root_leq(Root{1, 1}, rs.theta));
  CHECK(!rs.root_leq(rs.theta, Root{1, 1}));
  CHECK(rs.is_positive_root(Root{1, 1}));
  CHECK(!rs.is_positive_root(Root{2, 1}));
  CHECK(rs.is_root(Root{-1, -2}));
  CHECK(!rs.is_root(Root{0, 0}));
  for (const Root& g : rs.positive) CHECK(rs.root_leq(g, rs.theta));
}

TEST_CASE("half_floor") {
  RootSystem a3 = make("A3");
  CHECK(a3.half_floor(a3.theta) == Root{0, 0, 0});
  RootSystem b2 = make("B2");
  CHECK(b2.half_floor(b2.theta) == Root{0, 1});
  CHECK(b2.is_positive_root(b2.half_floor(b2.theta)));
  CHECK_THROWS_AS(b2.half_floor(Root{-1, 0}), std::invalid_argument);
}

TEST_CASE("principal upper sets") {
  RootSystem a3 = make("A3");
  int a2_idx = a3.index_of.at(Root{0, 1, 0});
  CHECK(a3.principal_upper(a2_idx).indices() == std::vector<int>{1, 3, 4, 5});
  RootSystem b2 = make("B2");
  CHECK(b2.principal_upper(3).indices() == std::vector<int>{3});
}

TEST_CASE("support and Dynkin connectivity") {
  RootSystem a3 = make("A3");
  CHECK(a3.support(a3.theta) == std::vector<int>{0, 1, 2});
  CHECK(a3.connected({0, 1, 2}));
  CHECK(!a3.connected({0, 2}));
  for (const Root& g : a3.positive) CHECK(a3.connected(a3.support(g)));
  RootSystem d4 = make("D4");
  CHECK(d4.connected({0, 1, 2, 3}));
  CHECK(!d4.connected({0, 2}));
  CHECK(!d4.connected({2, 3}));
  for (CartanType t : all_types_up_to_rank8()) {
    RootSystem rs = RootSystem::build(t);
    for (const Root& g : rs.positive)
      if (!rs.connected(rs.support(g))) FAIL(t.name(), ": disconnected support found");
  }
}

TEST_CASE("upper closure and the abelian predicate") {
  RootSystem b2 = make("B2");
  RootSet s;
  s.set(2);  // alpha_1 + alpha_2
  CHECK(b2.upper_closure(s).indices() == std::vector<int>{2, 3});
  CHECK(!b2.upper_closed(s));
  CHECK(b2.upper_closed(b2.upper_closure(s)));
  CHECK(!b2.abelian(RootSet::of({0, 2})));      // alpha_2 + (a1+a2) = theta
  CHECK(b2.abelian(RootSet::of({1, 2, 3})));
  CHECK(b2.abelian(RootSet{}));
}

TEST_CASE("sum of long simple roots") {
  CHECK(make("B2").pi_l_sum() == Root{1, 0});
  CHECK(make("C3").pi_l_sum() == Root{0, 0, 1});
  CHECK(make("F4").pi_l_sum() == Root{1, 1, 0, 0});
  CHECK(make("G2").pi_l_sum() == Root{0, 1});
  RootSystem a3 = make("A3");
  CHECK(a3.pi_l_sum() == a3.theta);
  for (CartanType t : all_types_up_to_rank8()) {
    RootSystem rs = RootSystem::build(t);
    CHECK(rs.is_positive_root(rs.pi_l_sum()));
  }
}

TEST_CASE("(theta, |Pi_l|) vanishes exactly for the C series and B2") {
  for (CartanType t : all_types_up_to_rank8()) {
    RootSystem rs = RootSystem::build(t);
    bool orth = rs.bilinear(rs.pi_l_sum(), rs.theta) == Rat(0);
    bool expect = (t.family == Family::C) || (t.family == Family::B && t.rank == 2);
    CHECK_MESSAGE(orth == expect, t.name());
  }
}

TEST_CASE("E8 numbering adapter") {
  RootSystem rs = make("E8");
  CHECK(rs.digit_string(rs.theta, Numbering::bourbaki) == "23465432");
  CHECK(rs.digit_string(rs.theta, Numbering::paper) == "23456423");
  CHECK(rs.paper_to_internal == std::vector<int>{7, 6, 5, 4, 3, 2, 0, 1});
  Root hf = rs.half_floor(rs.theta);
  CHECK(rs.is_positive_root(hf));
  CHECK(rs.digit_string(hf, Numbering::paper) == "11223211");
  // H is read off the first display coefficient in the chain numbering
  for (int i = 0; i < static_cast<int>(rs.positive.size()); ++i) {
    int n1 = rs.display_coeffs(rs.positive[i], Numbering::paper)[0];
    CHECK(static_cast<bool>(rs.in_h[i]) == (n1 != 0));
  }
  CHECK(rs.h_set.size() == 57);
  // round trip through the display numbering
  for (const Root& g : rs.positive)
    CHECK(rs.from_display(rs.display_coeffs(g, Numbering::paper), Numbering::paper) == g);
}

TEST_CASE("display strings") {
  RootSystem b2 = make("B2");
  CHECK(b2.coeff_string(b2.theta, Numbering::bourbaki) == "1,2");
  CHECK(b2.pretty(b2.theta) == "θ");
  CHECK(b2.pretty(Root{1, 0}) == "α1");
  CHECK(b2.pretty(Root{1, 1}) == "1,1");
  CHECK_THROWS_AS(b2.from_display({1}, Numbering::bourbaki), std::invalid_argument);
}

TEST_CASE("bilinear form is symmetric and Weyl-invariant on simple reflections") {
  for (const char* name : {"B3", "C3", "F4", "G2", "D4"}) {
    RootSystem rs = make(name);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) CHECK(rs.bilin[i][j] == rs.bilin[j][i]);
    // s_k(alpha_j) = alpha_j - c[j][k] alpha_k preserves the form
    for (int k = 0; k < rs.rank; ++k)
      for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) {
          Root si = rs.simple(i), sj = rs.simple(j);
          si[k] -= rs.cartan[i][k];
          sj[k] -= rs.cartan[j][k];
          CHECK(rs.bilinear(si, sj) == rs.bilin[i][j]);
        }
  }
}

TEST_CASE("theta is the unique maximum and is long") {
  for (CartanType t : all_types_up_to_rank8()) {
    RootSystem rs = RootSystem::build(t);
    CHECK(rs.bilinear(rs.theta, rs.theta) == Rat(2));
    int strictly_below = 0;
    for (const Root& g : rs.positive)
      if (g != rs.theta && rs.root_leq(g, rs.theta)) ++strictly_below;
    CHECK(strictly_below == static_cast<int>(rs.positive.size()) - 1);
  }
}
