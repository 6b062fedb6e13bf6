#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace cayley;
using testsupport::all_nonempty_subsets;
using testsupport::naive_product;
using testsupport::q8;
using testsupport::random_nonempty_subset;

TEST_CASE("frozen product values") {
  auto z4 = Group::cyclic(4);
  CHECK(product(Subset::of(z4, {0, 1, 2}), Subset::of(z4, {0, 1})) == Subset::full(z4));

  auto v4 = Group::elementary_abelian(2, 2);
  CHECK(product(Subset::of(v4, {0, 1}), Subset::of(v4, {0, 2})) == Subset::full(v4));

  auto h = Subset::of(z4, {0, 2});
  auto coset = product(h, complement(h));
  CHECK(coset == Subset::of(z4, {1, 3}));
  CHECK_FALSE(coset.mask().intersects(h.mask()));
}

TEST_CASE("product with an empty operand is empty") {
  auto z4 = Group::cyclic(4);
  auto a = Subset::of(z4, {1, 2});
  CHECK(product(a, Subset::empty(z4)).is_empty());
  CHECK(product(Subset::empty(z4), a).is_empty());
}

TEST_CASE("product size lower bound and absorption by G") {
  for (const auto& g : testsupport::small_group_pool()) {
    std::mt19937_64 rng(g->order() * 7919u + 11);
    for (int rep = 0; rep < 20; ++rep) {
      auto a = random_nonempty_subset(rng, g);
      auto b = random_nonempty_subset(rng, g);
      auto p = product(a, b);
      CHECK(p.size() >= std::max(a.size(), b.size()));
      CHECK(product(a, Subset::full(g)) == Subset::full(g));
      CHECK(product(Subset::full(g), a) == Subset::full(g));
    }
  }
}

TEST_CASE("kernel agrees with the dense oracle") {
  SECTION("exhaustive on Z5") {
    auto z5 = Group::cyclic(5);
    auto subsets = all_nonempty_subsets(z5);
    for (const auto& a : subsets)
      for (const auto& b : subsets)
        REQUIRE(product(a, b) == naive_product(a, b));
  }
  SECTION("randomized across the pool") {
    for (const auto& g : testsupport::small_group_pool()) {
      std::mt19937_64 rng(0xabcdef ^ g->order());
      for (int rep = 0; rep < 40; ++rep) {
        auto a = random_nonempty_subset(rng, g);
        auto b = random_nonempty_subset(rng, g);
        REQUIRE(product(a, b) == naive_product(a, b));
      }
    }
  }
}

TEST_CASE("product rejects cross-group operands") {
  auto a = Group::cyclic(4);
  auto b = Group::cyclic(4);
  CHECK_THROWS_AS(product(Subset::full(a), Subset::full(b)), GroupMismatch);
}

TEST_CASE("complement and inverse-set") {
  auto z4 = Group::cyclic(4);
  CHECK(complement(Subset::of(z4, {0, 2})) == Subset::of(z4, {1, 3}));
  CHECK(inverse_set(Subset::of(z4, {1})) == Subset::of(z4, {3}));
  for (const auto& g : testsupport::small_group_pool()) {
    std::mt19937_64 rng(g->order());
    auto a = random_nonempty_subset(rng, g);
    CHECK(complement(complement(a)) == a);
    CHECK(inverse_set(inverse_set(a)) == a);
    CHECK(inverse_set(a).size() == a.size());
  }
}

TEST_CASE("frozen powers") {
  auto z6 = Group::cyclic(6);
  auto a = Subset::of(z6, {1, 2});
  CHECK(power(a, 1) == a);
  CHECK(power(a, 2) == Subset::of(z6, {2, 3, 4}));
  CHECK(power(a, 5) == Subset::full(z6));

  auto z4 = Group::cyclic(4);
  auto h = Subset::of(z4, {0, 2});
  for (int k = 1; k <= 6; ++k) CHECK(power(h, k) == h);

  CHECK_THROWS_AS(power(Subset::empty(z4), 2), EmptySubset);
}

TEST_CASE("power growth is monotone") {
  for (const auto& g : testsupport::small_group_pool()) {
    std::mt19937_64 rng(31 * g->order());
    for (int rep = 0; rep < 10; ++rep) {
      auto a = random_nonempty_subset(rng, g);
      Subset x = a;
      for (int k = 1; k <= 12; ++k) {
        Subset next = product(x, a);
        CHECK(next.size() >= x.size());
        x = next;
      }
    }
  }
}

TEST_CASE("stabilization: reaches G") {
  auto z6 = Group::cyclic(6);
  auto rep = stabilizes_at_group(Subset::of(z6, {1, 2}));
  REQUIRE(rep.stabilizes);
  CHECK(rep.k == 5);
  CHECK_FALSE(rep.cycle.has_value());
  CHECK(rep.sizes == std::vector<int>{2, 3, 4, 5, 6});
}

TEST_CASE("stabilization: the whole group stabilizes at k = 1") {
  for (const auto& g : testsupport::small_group_pool()) {
    auto rep = stabilizes_at_group(Subset::full(g));
    CHECK(rep.stabilizes);
    CHECK(rep.k == 1);
  }
}

TEST_CASE("stabilization: coset cycle is detected") {
  auto z4 = Group::cyclic(4);
  auto rep = stabilizes_at_group(Subset::of(z4, {1, 3}));
  REQUIRE_FALSE(rep.stabilizes);
  REQUIRE(rep.cycle.has_value());
  CHECK(rep.cycle->start == 1);
  CHECK(rep.cycle->period == 2);
}

TEST_CASE("stabilization: subgroup is a fixed point below G") {
  auto z6 = Group::cyclic(6);
  auto rep = stabilizes_at_group(Subset::of(z6, {2, 4}));
  REQUIRE_FALSE(rep.stabilizes);
  REQUIRE(rep.cycle.has_value());
  CHECK(rep.cycle->start == 2);
  CHECK(rep.cycle->period == 1);
}

TEST_CASE("stabilization: errors") {
  auto z6 = Group::cyclic(6);
  CHECK_THROWS_AS(stabilizes_at_group(Subset::empty(z6)), EmptySubset);
  CHECK_THROWS_AS(stabilizes_at_group(Subset::of(z6, {1, 2}), 2), Inconclusive);
}

TEST_CASE("stabilization k is minimal") {
  for (const auto& g : testsupport::small_group_pool()) {
    std::mt19937_64 rng(101 + g->order());
    for (int rep = 0; rep < 15; ++rep) {
      auto a = random_nonempty_subset(rng, g);
      auto r = stabilizes_at_group(a);
      if (!r.stabilizes) continue;
      CHECK(power(a, *r.k).is_full());
      if (*r.k > 1) CHECK_FALSE(power(a, *r.k - 1).is_full());
    }
  }
}

TEST_CASE("Mann covering, exhaustively on every group of order <= 8") {
  std::vector<GroupPtr> pool = {
      Group::cyclic(1),  Group::cyclic(2), Group::cyclic(3), Group::cyclic(4),
      Group::cyclic(5),  Group::cyclic(6), Group::cyclic(7), Group::cyclic(8),
      Group::elementary_abelian(2, 2),     Group::elementary_abelian(2, 3),
      Group::direct_product(Group::cyclic(2), Group::cyclic(4)),
      Group::symmetric(3), Group::dihedral(4), q8(),
  };
  for (const auto& g : pool) {
    auto subsets = all_nonempty_subsets(g);
    for (const auto& a : subsets)
      for (const auto& b : subsets) {
        if (a.size() + b.size() > g->order())
          REQUIRE(product(a, b).is_full());
        if (a.size() > g->order() / 2) {
          REQUIRE(product(a, a).is_full());
          REQUIRE(product(a, inverse_set(a)).is_full());
        }
      }
  }
}

TEST_CASE("a subset commutes with its complement, exhaustively up to order 8") {
  for (const auto& g : {Group::cyclic(8), Group::symmetric(3), Group::dihedral(4), q8()}) {
    for (const auto& a : all_nonempty_subsets(g))
      REQUIRE(product(a, complement(a)) == product(complement(a), a));
  }
}

TEST_CASE("subset families validate their members") {
  auto z4 = Group::cyclic(4);
  CHECK_THROWS_AS(SubsetFamily({Subset::of(z4, {1}), Subset::empty(z4)}), EmptySubset);
  CHECK_THROWS_AS(SubsetFamily(std::vector<Subset>{}), Error);
  auto other = Group::cyclic(4);
  CHECK_THROWS_AS(SubsetFamily({Subset::full(z4), Subset::full(other)}), GroupMismatch);
  SubsetFamily ok{Subset::of(z4, {1}), Subset::of(z4, {2, 3})};
  CHECK(ok.size() == 2);
  CHECK(fold_product(ok) == Subset::of(z4, {3, 0}));
}

TEST_CASE("subgroup detector") {
  auto z6 = Group::cyclic(6);
  CHECK(is_subgroup(Subset::of(z6, {0, 2, 4})));
  CHECK(is_subgroup(Subset::of(z6, {0, 3})));
  CHECK(is_subgroup(Subset::full(z6)));
  CHECK_FALSE(is_subgroup(Subset::of(z6, {0, 1})));
  CHECK_FALSE(is_subgroup(Subset::of(z6, {2, 4})));
  CHECK_FALSE(is_subgroup(Subset::empty(z6)));
  auto s3 = Group::symmetric(3);
  CHECK(is_subgroup(Subset::of(s3, {0, 3, 4})));
  CHECK_FALSE(is_subgroup(Subset::of(s3, {0, 3})));
}

TEST_CASE("subset printing uses labels when present") {
  auto v4 = Group::elementary_abelian(2, 2);
  CHECK(Subset::of(v4, {0, 1, 3}).to_string() == "{e,a,ab}");
  auto z4 = Group::cyclic(4);
  CHECK(Subset::of(z4, {0, 2}).to_string() == "{0,2}");
}
