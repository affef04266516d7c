#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rootlet/lattice.hpp"

using namespace rootlet;

namespace {

RootSystem make(const std::string& name) { return RootSystem::build(CartanType::parse(name)); }

}  // namespace

TEST_CASE("join closed form on small examples") {
  auto a2 = make("A2");
  auto r = join(a2, {1, 0}, {0, 1});
  CHECK(r.value == Root{1, 1});
  CHECK(r.mode == JoinMode::overlap_max);
  CHECK(!r.bridge.has_value());

  auto same = join(a2, {1, 1}, {1, 1});
  CHECK(same.value == Root{1, 1});
  CHECK(same.mode == JoinMode::comparable);

  auto below = join(a2, {1, 0}, {1, 1});
  CHECK(below.value == Root{1, 1});
  CHECK(below.mode == JoinMode::comparable);

  auto a3 = make("A3");
  auto b = join(a3, {1, 0, 0}, {0, 0, 1});
  CHECK(b.value == Root{1, 1, 1});
  CHECK(b.mode == JoinMode::disjoint_bridge);
  REQUIRE(b.bridge.has_value());
  CHECK(*b.bridge == Root{0, 1, 0});

  auto d4 = make("D4");
  auto c = join(d4, {1, 0, 0, 0}, {0, 0, 0, 1});  // alpha1 and alpha4 sit across the hub alpha2
  CHECK(c.mode == JoinMode::disjoint_bridge);
  CHECK(*c.bridge == Root{0, 1, 0, 0});
  CHECK(c.value == Root{1, 1, 0, 1});
  auto hub = join(d4, {0, 1, 0, 0}, {0, 0, 0, 1});  // adjacent supports
  CHECK(hub.mode == JoinMode::overlap_max);
  CHECK(hub.value == Root{0, 1, 0, 1});

  CHECK_THROWS_AS(join(a2, Root{2, 0}, Root{0, 1}), std::invalid_argument);
}

TEST_CASE("join oracle frozen examples") {
  auto b2 = make("B2");
  CHECK(join_oracle(b2, {1, 0}, {0, 1}) == Root{1, 1});
  for (const Root& g : b2.positive) CHECK(join_oracle(b2, b2.theta, g) == b2.theta);
}

TEST_CASE("closed form equals the oracle on every pair") {
  for (const char* name : {"A3", "B3", "C3", "D4", "F4", "G2"}) {
    CAPTURE(name);
    auto rs = make(name);
    for (const Root& e : rs.positive)
      for (const Root& b : rs.positive) CHECK(join(rs, e, b).value == join_oracle(rs, e, b));
  }
}

TEST_CASE("join is idempotent, commutative, associative") {
  auto rs = make("F4");
  for (const Root& e : rs.positive) {
    CHECK(join(rs, e, e).value == e);
    for (const Root& b : rs.positive) CHECK(join(rs, e, b).value == join(rs, b, e).value);
  }
  std::mt19937 gen(20240801);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(rs.positive.size()) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Root& a = rs.positive[pick(gen)];
    const Root& b = rs.positive[pick(gen)];
    const Root& c = rs.positive[pick(gen)];
    Root left = join(rs, join(rs, a, b).value, c).value;
    Root right = join(rs, a, join(rs, b, c).value).value;
    CHECK(left == right);
  }
}

TEST_CASE("long roots are closed under join") {
  for (const char* name : {"B3", "C3", "F4", "G2"}) {
    CAPTURE(name);
    auto rs = make(name);
    for (int i : rs.long_pos)
      for (int j : rs.long_pos) {
        Root v = join(rs, rs.positive[i], rs.positive[j]).value;
        CHECK(rs.is_long[rs.index_if_positive(v)]);
      }
  }
}

TEST_CASE("principal upper sets intersect to the join's") {
  auto rs = make("B3");
  const int m = static_cast<int>(rs.positive.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Root v = join(rs, rs.positive[i], rs.positive[j]).value;
      RootSet meet = rs.principal_upper(i) & rs.principal_upper(j);
      CHECK(meet == rs.principal_upper(rs.index_if_positive(v)));
    }
}

TEST_CASE("join_many folds and ignores order") {
  auto a3 = make("A3");
  CHECK(join_many(a3, {a3.theta}) == a3.theta);
  CHECK(join_many(a3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == a3.theta);
  CHECK_THROWS_AS(join_many(a3, {}), std::invalid_argument);

  // the join of the long simple roots is their sum
  for (const char* name : {"A3", "B2", "B4", "C3", "D4", "F4", "G2", "E6"}) {
    CAPTURE(name);
    auto rs = make(name);
    std::vector<Root> longs;
    for (int a : rs.simple_long) longs.push_back(rs.simple(a));
    CHECK(join_many(rs, longs) == rs.pi_l_sum());
  }

  std::mt19937 gen(77);
  auto f4 = make("F4");
  std::uniform_int_distribution<int> pick(0, static_cast<int>(f4.positive.size()) - 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Root> triple{f4.positive[pick(gen)], f4.positive[pick(gen)],
                             f4.positive[pick(gen)]};
    Root base = join_many(f4, triple);
    std::sort(triple.begin(), triple.end());
    do {
      CHECK(join_many(f4, triple) == base);
    } while (std::next_permutation(triple.begin(), triple.end()));
  }
}

TEST_CASE("commutative roots") {
  auto a2 = make("A2");
  auto atlas2 = enumerate_ideals(a2);
  CHECK(commutative_roots(a2, atlas2) == RootSet::full(3));

  auto b2 = make("B2");
  auto atlasb = enumerate_ideals(b2);
  RootSet com = commutative_roots(b2, atlasb);
  CHECK(com.indices() == std::vector<int>{1, 2, 3});  // alpha2 is excluded

  // the complement, when nonempty, has unique maximum [theta/2]
  for (const char* name : {"B2", "B4", "C3", "D4", "F4", "G2", "E6"}) {
    CAPTURE(name);
    auto rs = make(name);
    auto atlas = enumerate_ideals(rs);
    RootSet rest = RootSet::full(static_cast<int>(rs.positive.size())) -
                   commutative_roots(rs, atlas);
    REQUIRE(!rest.empty());
    Root half = rs.half_floor(rs.theta);
    int half_idx = rs.index_if_positive(half);
    REQUIRE(half_idx >= 0);
    CHECK(rest.test(half_idx));
    for (int i : rest.indices()) CHECK(rs.root_leq(i, half_idx));
  }
  for (const char* name : {"A1", "A4"}) {
    CAPTURE(name);
    auto rs = make(name);
    auto atlas = enumerate_ideals(rs);
    CHECK(commutative_roots(rs, atlas) ==
          RootSet::full(static_cast<int>(rs.positive.size())));
  }
}

TEST_CASE("delta slices") {
  auto a3 = make("A3");
  auto s = delta_slice(a3, 1, 1);
  std::vector<Root> got;
  for (int i : s.members) got.push_back(a3.positive[i]);
  CHECK(got == std::vector<Root>{{0, 1, 0}, {0, 1, 1}, {1, 1, 0}, {1, 1, 1}});
  CHECK(a3.positive[s.min_idx] == Root{0, 1, 0});
  CHECK(a3.positive[s.max_idx] == Root{1, 1, 1});
  CHECK(s.join_closed);

  auto b2 = make("B2");
  auto top = delta_slice(b2, 1, 2);
  CHECK(top.members == std::vector<int>{b2.theta_idx});
  CHECK(top.min_idx == b2.theta_idx);
  CHECK(top.max_idx == b2.theta_idx);
  CHECK(top.join_closed);

  auto empty = delta_slice(b2, 0, 2);
  CHECK(empty.members.empty());
  CHECK(empty.min_idx == -1);

  CHECK_THROWS_AS(delta_slice(b2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(delta_slice(b2, 5, 1), std::invalid_argument);

  // every nonempty slice in a spread of types is a lattice with unique ends
  for (const char* name : {"A4", "B3", "C4", "D5", "F4", "G2", "E6"}) {
    CAPTURE(name);
    auto rs = make(name);
    for (int a = 0; a < rs.rank; ++a) {
      for (int i = 1; i <= rs.theta[a]; ++i) {
        auto slice = delta_slice(rs, a, i);
        CAPTURE(a);
        CAPTURE(i);
        REQUIRE(!slice.members.empty());
        CHECK(slice.min_idx >= 0);
        CHECK(slice.max_idx >= 0);
        CHECK(slice.join_closed);
      }
    }
  }
}
