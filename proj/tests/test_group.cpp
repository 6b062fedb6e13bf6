#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace cayley;
using testsupport::q8;
using testsupport::q8_table;

TEST_CASE("trivial group from a 1x1 table") {
  auto g = Group::from_cayley_table({{0}});
  CHECK(g->order() == 1);
  CHECK(g->identity() == 0);
  CHECK(g->inv(0) == 0);
}

TEST_CASE("Z2 from its table") {
  auto g = Group::from_cayley_table({{0, 1}, {1, 0}});
  CHECK(g->order() == 2);
  CHECK(g->inv(0) == 0);
  CHECK(g->inv(1) == 1);
}

TEST_CASE("latin-square violation is rejected with a column witness") {
  std::vector<std::vector<int>> t = {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
  CHECK_THROWS_MATCHES(Group::from_cayley_table(t), NotAGroup,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("column")));
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(Group::from_cayley_table({}), MalformedTable);
  CHECK_THROWS_AS(Group::from_cayley_table({{0, 1}, {1}}), MalformedTable);
  CHECK_THROWS_AS(Group::from_cayley_table({{0, 7}, {1, 0}}), MalformedTable);
  CHECK_THROWS_AS(Group::from_cayley_table({{0, 1}, {1, 0}}, {"only-one"}),
                  MalformedTable);
}

TEST_CASE("a non-associative loop is rejected with a triple witness") {
  // Latin square with two-sided identity and two-sided inverses, but
  // (1.1).2 = 2 while 1.(1.2) = 4. A genuine order-5 group would be Z5,
  // which has no involutions, so this fails only at associativity.
  std::vector<std::vector<int>> t = {
      {0, 1, 2, 3, 4},
      {1, 0, 3, 4, 2},
      {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1},
      {4, 3, 1, 2, 0},
  };
  CHECK_THROWS_MATCHES(Group::from_cayley_table(t), NotAGroup,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("associativity")));
}

TEST_CASE("identity is relabeled to index 0") {
  // Z3 with elements renamed so the identity sits at index 2.
  // old indices: 0=g, 1=g^2, 2=e under x*y = (x+y+1) mod 3 style relabel.
  std::vector<std::vector<int>> t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  auto g = Group::from_cayley_table(t, {"g", "gg", "e"});
  CHECK(g->order() == 3);
  CHECK(g->identity() == 0);
  CHECK(g->element_name(0) == "e");
  for (int x = 0; x < 3; ++x) {
    CHECK(g->mul(0, x) == x);
    CHECK(g->mul(x, 0) == x);
  }
}

TEST_CASE("cyclic groups") {
  auto g = Group::cyclic(6);
  CHECK(g->order() == 6);
  CHECK(g->element_order(1) == 6);
  CHECK(g->mul(4, 5) == 3);
  CHECK(g->inv(2) == 4);
  CHECK_THROWS_AS(Group::cyclic(0), InvalidSpec);
}

TEST_CASE("elementary abelian groups") {
  auto v4 = Group::elementary_abelian(2, 2);
  CHECK(v4->order() == 4);
  for (int x = 1; x < 4; ++x) CHECK(v4->inv(x) == x);

  auto g27 = Group::elementary_abelian(3, 3);
  CHECK(g27->order() == 27);
  for (int x = 1; x < 27; ++x) CHECK(g27->element_order(x) == 3);

  CHECK_THROWS_AS(Group::elementary_abelian(4, 2), InvalidSpec);
  CHECK_THROWS_AS(Group::elementary_abelian(3, 0), InvalidSpec);
}

TEST_CASE("dihedral groups") {
  auto d4 = Group::dihedral(4);
  CHECK(d4->order() == 8);
  CHECK(d4->element_order(1) == 4);   // rotation r
  CHECK(d4->element_order(4) == 2);   // reflection s
  // s r = r^-1 s
  CHECK(d4->mul(4, 1) == d4->mul(3, 4));
  CHECK_THROWS_AS(Group::dihedral(0), InvalidSpec);
}

TEST_CASE("symmetric groups") {
  auto s3 = Group::symmetric(3);
  CHECK(s3->order() == 6);
  CHECK(s3->element_name(0) == "e");
  auto s4 = Group::symmetric(4);
  CHECK(s4->order() == 24);
  CHECK_THROWS_AS(Group::symmetric(9), InvalidSpec);
  CHECK_THROWS_AS(Group::symmetric(0), InvalidSpec);
}

TEST_CASE("direct products multiply orders") {
  auto g = Group::direct_product(Group::cyclic(4), Group::symmetric(3));
  CHECK(g->order() == 24);
  auto v4 = Group::direct_product(Group::cyclic(2), Group::cyclic(2));
  CHECK(v4->order() == 4);
  for (int x = 1; x < 4; ++x) CHECK(v4->inv(x) == x);
}

TEST_CASE("permutation generator closure") {
  // two transpositions generate S3
  auto s3 = Group::from_permutations({{1, 0, 2}, {0, 2, 1}});
  CHECK(s3->order() == 6);
  // a 3-cycle alone generates Z3
  auto z3 = Group::from_permutations({{1, 2, 0}});
  CHECK(z3->order() == 3);
  // closure cap
  std::vector<int> big(40);
  for (int i = 0; i < 40; ++i) big[i] = (i + 1) % 40;
  CHECK_THROWS_AS(Group::from_permutations({big}, 10), ClosureTooLarge);
  // not a permutation
  CHECK_THROWS_AS(Group::from_permutations({{0, 0, 1}}), InvalidSpec);
  CHECK_THROWS_AS(Group::from_permutations({{1, 0}, {0, 1, 2}}), InvalidSpec);
}

TEST_CASE("quaternion group from its table") {
  auto g = q8();
  CHECK(g->order() == 8);
  // i*i = -1, i*j = k, j*i = -k
  CHECK(g->mul(2, 2) == 1);
  CHECK(g->mul(2, 4) == 6);
  CHECK(g->mul(4, 2) == 7);
  CHECK(g->element_order(2) == 4);
  CHECK(g->element_name(1) == "-1");
}

TEST_CASE("checked element arithmetic") {
  auto z4 = Group::cyclic(4);
  GroupElement one(z4, 1), three(z4, 3);
  CHECK(mul(one, three).index() == 0);
  CHECK(inv(one).index() == 3);
  CHECK(mul(identity(z4), three) == three);
  CHECK_THROWS_AS(GroupElement(z4, 4), InvalidSpec);

  auto other = Group::cyclic(4);
  CHECK_THROWS_AS(mul(one, GroupElement(other, 1)), GroupMismatch);
}

TEST_CASE("axioms and inverse laws across every constructor, orders up to 48") {
  std::vector<GroupPtr> pool;
  for (int n = 1; n <= 48; ++n) pool.push_back(Group::cyclic(n));
  for (int k = 1; k <= 5; ++k) pool.push_back(Group::elementary_abelian(2, k));
  for (int k = 1; k <= 3; ++k) pool.push_back(Group::elementary_abelian(3, k));
  pool.push_back(Group::elementary_abelian(5, 2));
  pool.push_back(Group::elementary_abelian(7, 1));
  for (int m = 1; m <= 24; ++m) pool.push_back(Group::dihedral(m));
  for (int m = 1; m <= 4; ++m) pool.push_back(Group::symmetric(m));
  pool.push_back(Group::direct_product(Group::cyclic(2), Group::cyclic(24)));
  pool.push_back(Group::direct_product(Group::symmetric(3), Group::cyclic(4)));
  pool.push_back(Group::direct_product(Group::cyclic(6), Group::cyclic(8)));
  pool.push_back(Group::from_permutations({{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}}));
  pool.push_back(q8());

  for (const auto& g : pool) {
    INFO("group " << g->description());
    REQUIRE(g->order() <= 48);
    CHECK_NOTHROW(validate_group_axioms(*g));
    for (int x = 0; x < g->order(); ++x) {
      CHECK(g->inv(g->inv(x)) == x);
      for (int y = 0; y < g->order(); ++y)
        CHECK(g->inv(g->mul(x, y)) == g->mul(g->inv(y), g->inv(x)));
    }
  }
}

TEST_CASE("order facts: factorials, 2m, products") {
  CHECK(Group::symmetric(1)->order() == 1);
  CHECK(Group::symmetric(2)->order() == 2);
  CHECK(Group::symmetric(3)->order() == 6);
  CHECK(Group::symmetric(4)->order() == 24);
  CHECK(Group::symmetric(5)->order() == 120);
  for (int m : {1, 2, 3, 5, 9})
    CHECK(Group::dihedral(m)->order() == 2 * m);
  CHECK(Group::direct_product(Group::dihedral(3), Group::cyclic(5))->order() == 30);
}
