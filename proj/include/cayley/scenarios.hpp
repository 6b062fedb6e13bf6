#pragma once

#include <string>
#include <vector>

#include "cayley/algebra.hpp"
#include "cayley/group.hpp"
#include "cayley/subset.hpp"

namespace cayley {

struct ScenarioCheck {
  std::string what;
  bool ok;
};

struct ScenarioResult {
  ScenarioResult(std::string name, std::string title)
      : name(std::move(name)), title(std::move(title)) {}

  std::string name;
  std::string title;
  bool ok = true;
  std::vector<ScenarioCheck> checks;

  void expect(std::string what, bool got) {
    ok = ok && got;
    checks.push_back({std::move(what), got});
  }
};

using ScenarioFn = ScenarioResult (*)();

struct Scenario {
  const char* name;
  const char* title;
  ScenarioFn run;
};

namespace scenarios {

/// A proper subgroup H with partner G \ H: sizes add up to |G|, yet the
/// product misses every element of H.
inline ScenarioResult ex1() {
  ScenarioResult r{"ex1", "H . (G \\ H) != G for a proper subgroup H"};
  {
    auto z4 = Group::cyclic(4);
    auto h = Subset::of(z4, {0, 2});
    auto a2 = complement(h);
    r.expect("Z4: {0,2} is a subgroup", is_subgroup(h));
    r.expect("Z4: |A1| + |A2| = |G|", h.size() + a2.size() == z4->order());
    r.expect("Z4: H . (G \\ H) = {1,3}", product(h, a2) == Subset::of(z4, {1, 3}));
    r.expect("Z4: product != G", !product(h, a2).is_full());
    r.expect("Z4: pair classifies as equal-size boundary",
             mann_pair(h, a2) == PairClass::Equal);
    r.expect("Z4: A1.A2 = comp(A1).comp(A2)",
             product(h, a2) == product(complement(h), complement(a2)));
  }
  {
    auto s3 = Group::symmetric(3);
    auto h = Subset::of(s3, {0, 3, 4});  // even permutations
    auto a2 = complement(h);
    r.expect("S3: even permutations form a subgroup", is_subgroup(h));
    r.expect("S3: H . (G \\ H) = odd permutations",
             product(h, a2) == a2);
    r.expect("S3: product != G", !product(h, a2).is_full());
  }
  return r;
}

/// Two order-2 subgroups of the Klein four-group: sizes again add to |G|,
/// but now the product is the whole group.
inline ScenarioResult ex2() {
  ScenarioResult r{"ex2", "two order-2 subgroups cover the Klein four-group"};
  auto v4 = Group::elementary_abelian(2, 2);
  auto a1 = Subset::of(v4, {0, 1});  // {e, a}
  auto a2 = Subset::of(v4, {0, 2});  // {e, b}
  r.expect("A1 and A2 are subgroups", is_subgroup(a1) && is_subgroup(a2));
  r.expect("|A1| + |A2| = |G|", a1.size() + a2.size() == v4->order());
  r.expect("A1.A2 = G", product(a1, a2).is_full());
  r.expect("A1 and A2 intersect in the identity",
           a1.mask().intersects(a2.mask()));
  SubsetFamily b{a1, a2};
  r.expect("d(B) = 0", d_of_family(b) == 0);
  r.expect("sign decision: products equal", decide_by_sign(b) == Decision::ProductsEqual);
  r.expect("comp(A1).comp(A2) = G too",
           product(complement(a1), complement(a2)).is_full());
  return r;
}

/// Disjoint A1, A2 with |A1| + |A2| = |G| that still cover an elementary
/// abelian 3-group of order 27.
inline ScenarioResult ex3() {
  ScenarioResult r{"ex3", "disjoint equal-boundary pair covering ea(3,3)"};
  auto g = Group::elementary_abelian(3, 3);
  auto a1 = Subset::of(g, {0, 1, 3});  // {e, a, b}
  auto a2 = complement(a1);
  r.expect("|A1| + |A2| = |G| = 27", a1.size() + a2.size() == 27);
  r.expect("A1 and A2 are disjoint", !a1.mask().intersects(a2.mask()));
  r.expect("A1.A2 = G", product(a1, a2).is_full());
  SubsetFamily b{a1, a2};
  auto counts = count_products_bruteforce(b);
  bool all_positive = true;
  for (int e = 0; e < g->order(); ++e) all_positive = all_positive && counts[e] > 0;
  r.expect("every g has a factorization (brute force)", all_positive);
  r.expect("pair classifies as equal-size boundary", mann_pair(a1, a2) == PairClass::Equal);
  return r;
}

/// An index-2 subgroup with any partner containing {e, t}, t outside the
/// subgroup, covers G even though |A1| + |A2| < |G|. The size condition is
/// sufficient, not necessary.
inline ScenarioResult ex4() {
  ScenarioResult r{"ex4", "index-2 subgroup with {e,t} partner covers G below the bound"};
  {
    auto z6 = Group::cyclic(6);
    auto a1 = Subset::of(z6, {0, 2, 4});
    auto a2 = Subset::of(z6, {0, 1});
    r.expect("Z6: A1 is an index-2 subgroup",
             is_subgroup(a1) && 2 * a1.size() == z6->order());
    r.expect("Z6: A2 contains e and t outside A1",
             a2.contains(0) && a2.contains(1) && !a1.contains(1));
    r.expect("Z6: |A1| + |A2| < |G|", a1.size() + a2.size() < z6->order());
    r.expect("Z6: A1.A2 = G", product(a1, a2).is_full());
    r.expect("Z6: pair classifies below the boundary",
             mann_pair(a1, a2) == PairClass::Below);
    r.expect("Z6: comp(A1).comp(A2) = G as well",
             product(complement(a1), complement(a2)).is_full());
  }
  {
    auto d4 = Group::dihedral(4);
    auto a1 = Subset::of(d4, {0, 1, 2, 3});  // rotations
    auto a2 = Subset::of(d4, {0, 4});        // {e, s}
    r.expect("D4: rotations form an index-2 subgroup",
             is_subgroup(a1) && 2 * a1.size() == d4->order());
    r.expect("D4: |A1| + |A2| < |G|", a1.size() + a2.size() < d4->order());
    r.expect("D4: A1.A2 = G", product(a1, a2).is_full());
    r.expect("D4: comp(A1).comp(A2) = G as well",
             product(complement(a1), complement(a2)).is_full());
  }
  return r;
}

/// h.g stays outside H when h is in the subgroup H and g outside it.
inline ScenarioResult eq5() {
  ScenarioResult r{"eq5", "H . (G \\ H) is disjoint from H"};
  {
    auto z4 = Group::cyclic(4);
    auto h = Subset::of(z4, {0, 2});
    r.expect("Z4: {0,2} is a subgroup", is_subgroup(h));
    r.expect("Z4: H.(G \\ H) misses H",
             !product(h, complement(h)).mask().intersects(h.mask()));
  }
  {
    auto s3 = Group::symmetric(3);
    auto h = Subset::of(s3, {0, 3, 4});
    r.expect("S3: even permutations form a subgroup", is_subgroup(h));
    r.expect("S3: H.(G \\ H) misses H",
             !product(h, complement(h)).mask().intersects(h.mask()));
  }
  return r;
}

/// |A| > |G|/2 forces A.A = A.A^-1 = G; at exactly |G|/2 an index-2
/// subgroup is the counterexample.
inline ScenarioResult boundary() {
  ScenarioResult r{"boundary", "|A| = |G|/2 defeats the half-order covering bound"};
  struct Case {
    GroupPtr g;
    std::vector<int> a;
    const char* tag;
  };
  std::vector<Case> cases;
  cases.push_back({Group::cyclic(4), {0, 2}, "Z4"});
  cases.push_back({Group::cyclic(6), {0, 2, 4}, "Z6"});
  cases.push_back({Group::dihedral(4), {0, 1, 2, 3}, "D4"});
  for (const auto& c : cases) {
    auto a = Subset::of(c.g, c.a);
    r.expect(std::string(c.tag) + ": A is an index-2 subgroup",
             is_subgroup(a) && 2 * a.size() == c.g->order());
    r.expect(std::string(c.tag) + ": A.A = A != G",
             product(a, a) == a && !a.is_full());
    r.expect(std::string(c.tag) + ": A.A^-1 = A != G",
             product(a, inverse_set(a)) == a);
  }
  return r;
}

/// A and its complement commute as sets: A.comp(A) = comp(A).A, for every
/// subset. Checked exhaustively on an abelian and a nonabelian group.
inline ScenarioResult cor5() {
  ScenarioResult r{"cor5", "A . complement(A) = complement(A) . A"};
  for (const auto& g : {Group::cyclic(6), Group::symmetric(3)}) {
    bool all = true;
    const int n = g->order();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      Bitset m(n);
      for (int i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) m.set(i);
      Subset a(g, m);
      if (!(product(a, complement(a)) == product(complement(a), a))) all = false;
    }
    r.expect(g->description() + ": all " + std::to_string((1 << n) - 1) +
                 " nonempty subsets commute with their complements",
             all);
  }
  return r;
}

}  // namespace scenarios

/// The golden example suite: concrete instances, frozen expected outcomes.
inline const std::vector<Scenario>& paper_scenarios() {
  static const std::vector<Scenario> all = {
      {"ex1", "H . (G \\ H) != G for a proper subgroup H", scenarios::ex1},
      {"ex2", "two order-2 subgroups cover the Klein four-group", scenarios::ex2},
      {"ex3", "disjoint equal-boundary pair covering ea(3,3)", scenarios::ex3},
      {"ex4", "index-2 subgroup with {e,t} partner covers G below the bound",
       scenarios::ex4},
      {"eq5", "H . (G \\ H) is disjoint from H", scenarios::eq5},
      {"boundary", "|A| = |G|/2 defeats the half-order covering bound",
       scenarios::boundary},
      {"cor5", "A . complement(A) = complement(A) . A", scenarios::cor5},
  };
  return all;
}

inline const Scenario* find_scenario(const std::string& name) {
  for (const auto& s : paper_scenarios())
    if (name == s.name) return &s;
  return nullptr;
}

}  // namespace cayley
