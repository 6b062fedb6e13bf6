#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayley/errors.hpp"
#include "cayley/group.hpp"
#include "cayley/numeric.hpp"
#include "cayley/subset.hpp"

namespace cayley {

/// Element of the integer group algebra: one exact coefficient per group
/// element. Int is BigInt by default; CheckedInt64 is the opt-in fast path.
template <typename Int = BigInt>
class AlgebraVector {
public:
  AlgebraVector(GroupPtr group, std::vector<Int> coeffs)
      : group_(std::move(group)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != group_->order())
      throw Error("coefficient vector length " + std::to_string(c_.size()) +
                  " does not match group order " + std::to_string(group_->order()));
  }

  static AlgebraVector zero(GroupPtr g) {
    int n = g->order();
    return {std::move(g), std::vector<Int>(static_cast<std::size_t>(n), Int(0))};
  }

  const GroupPtr& group() const { return group_; }
  int order() const { return group_->order(); }
  const Int& operator[](int g) const { return c_[static_cast<std::size_t>(g)]; }
  Int& operator[](int g) { return c_[static_cast<std::size_t>(g)]; }
  const std::vector<Int>& coefficients() const { return c_; }

  Int coefficient_sum() const {
    Int s(0);
    for (const Int& v : c_) s += v;
    return s;
  }

  AlgebraVector scaled(const Int& k) const {
    std::vector<Int> out(c_);
    for (Int& v : out) v *= k;
    return {group_, std::move(out)};
  }

  bool operator==(const AlgebraVector& o) const {
    return group_->id() == o.group_->id() && c_ == o.c_;
  }

private:
  GroupPtr group_;
  std::vector<Int> c_;
};

template <typename Int>
AlgebraVector<Int> operator+(const AlgebraVector<Int>& a, const AlgebraVector<Int>& b) {
  require_same_group(a.group(), b.group(), "vector add");
  std::vector<Int> out(a.coefficients());
  for (int g = 0; g < a.order(); ++g) out[static_cast<std::size_t>(g)] += b[g];
  return {a.group(), std::move(out)};
}

template <typename Int>
AlgebraVector<Int> operator-(const AlgebraVector<Int>& a, const AlgebraVector<Int>& b) {
  require_same_group(a.group(), b.group(), "vector sub");
  std::vector<Int> out(a.coefficients());
  for (int g = 0; g < a.order(); ++g) out[static_cast<std::size_t>(g)] -= b[g];
  return {a.group(), std::move(out)};
}

/// [X]: coefficient 1 on the members of x, 0 elsewhere. [empty] = 0.
template <typename Int = BigInt>
AlgebraVector<Int> indicator(const Subset& x) {
  auto v = AlgebraVector<Int>::zero(x.group());
  x.mask().for_each_set([&](int g) { v[g] = Int(1); });
  return v;
}

/// Product in ZG: result(g) = sum over x.y = g of u(x) v(y). Iterates nonzero
/// coefficients only.
template <typename Int>
AlgebraVector<Int> convolve(const AlgebraVector<Int>& u, const AlgebraVector<Int>& v) {
  require_same_group(u.group(), v.group(), "convolve");
  const Group& grp = *u.group();
  const int n = grp.order();
  auto out = AlgebraVector<Int>::zero(u.group());
  for (int x = 0; x < n; ++x) {
    if (u[x] == Int(0)) continue;
    for (int y = 0; y < n; ++y) {
      if (v[y] == Int(0)) continue;
      out[grp.mul(x, y)] += u[x] * v[y];
    }
  }
  return out;
}

/// { g : coefficient(g) != 0 } as a subset.
template <typename Int>
Subset support(const AlgebraVector<Int>& v) {
  Bitset m(v.order());
  for (int g = 0; g < v.order(); ++g)
    if (v[g] != Int(0)) m.set(g);
  return {v.group(), std::move(m)};
}

namespace detail {

/// Fold of convolve over indicator vectors; members may be empty subsets
/// (an empty indicator is the zero vector and annihilates the fold).
template <typename Int>
AlgebraVector<Int> fold_indicators(const std::vector<Subset>& members) {
  auto v = indicator<Int>(members.at(0));
  for (std::size_t i = 1; i < members.size(); ++i)
    v = convolve(v, indicator<Int>(members[i]));
  return v;
}

template <typename Int>
struct DFamily {
  Int d;
  Int product_of_sizes;
  Int product_of_complement_sizes;
};

/// d(B) = (prod |A_i| - (-1)^n prod |complement A_i|) / |G|, computed exactly.
/// Divisibility by |G| is unconditional mathematics; a remainder means a bug.
template <typename Int>
DFamily<Int> d_of_family_impl(const SubsetFamily& b) {
  const Int order(b.group()->order());
  Int prod_a(1), prod_abar(1);
  for (const Subset& s : b) {
    prod_a *= Int(s.size());
    prod_abar *= Int(b.group()->order() - s.size());
  }
  const bool even = b.size() % 2 == 0;
  Int numerator = even ? Int(prod_a - prod_abar) : Int(prod_a + prod_abar);
  if (numerator % order != Int(0))
    throw InternalInconsistency(
        "d(B) is not an integer for family " + b.to_string() + ": numerator " +
        to_decimal_string(numerator) + " is not divisible by " +
        to_decimal_string(order));
  return {numerator / order, prod_a, prod_abar};
}

/// Tuple enumeration over explicit member lists, tallying products.
template <typename Int>
void enumerate_tuples(const Group& g, const std::vector<std::vector<int>>& lists,
                      std::size_t depth, Group::Element prefix,
                      std::vector<Int>& tally) {
  if (depth == lists.size()) {
    tally[static_cast<std::size_t>(prefix)] += Int(1);
    return;
  }
  for (int e : lists[depth]) enumerate_tuples(g, lists, depth + 1, g.mul(prefix, e), tally);
}

template <typename Int>
AlgebraVector<Int> bruteforce_counts(const GroupPtr& gp, const std::vector<Subset>& members,
                                     std::uint64_t cap) {
  BigInt tuples(1);
  for (const Subset& s : members) tuples *= s.size();
  if (tuples > BigInt(cap)) {
    std::uint64_t clamped = tuples > BigInt(UINT64_MAX)
                                ? UINT64_MAX
                                : static_cast<std::uint64_t>(tuples);
    throw TooLarge(clamped, cap);
  }
  std::vector<std::vector<int>> lists;
  lists.reserve(members.size());
  for (const Subset& s : members) {
    lists.push_back(s.elements());
    if (lists.back().empty())  // zero tuples overall
      return AlgebraVector<Int>::zero(gp);
  }
  std::vector<Int> tally(static_cast<std::size_t>(gp->order()), Int(0));
  enumerate_tuples(*gp, lists, 0, gp->identity(), tally);
  return {gp, std::move(tally)};
}

}  // namespace detail

/// The paper's d(B), exact. Invariant under permutations of the family.
inline BigInt d_of_family(const SubsetFamily& b) {
  return detail::d_of_family_impl<BigInt>(b).d;
}

/// N_B(g) for every g, alongside the complement family's counts and d(B).
template <typename Int = BigInt>
struct CountReport {
  SubsetFamily family;
  AlgebraVector<Int> counts;             // N_B(g)
  AlgebraVector<Int> counts_complement;  // N_Bbar(g)
  Int d;
};

/// Count, for every g, the tuples (a_1, ..., a_n) in A_1 x ... x A_n whose
/// product is g, by folding convolutions of indicator vectors. The counting
/// identity relating counts, complement counts and d(B) is re-checked on
/// every call; a violation can only mean a bug and throws.
template <typename Int = BigInt>
CountReport<Int> count_products(const SubsetFamily& b) {
  std::vector<Subset> members(b.begin(), b.end());
  auto counts = detail::fold_indicators<Int>(members);
  auto counts_c = detail::fold_indicators<Int>(b.complements());
  auto df = detail::d_of_family_impl<Int>(b);
  const bool even = b.size() % 2 == 0;
  for (int g = 0; g < b.group()->order(); ++g) {
    Int lhs = even ? Int(counts[g] - counts_c[g]) : Int(counts[g] + counts_c[g]);
    if (lhs != df.d)
      throw InternalInconsistency(
          "counting identity violated at g=" + b.group()->element_name(g) +
          " for family " + b.to_string() + ": got " + to_decimal_string(lhs) +
          ", expected d=" + to_decimal_string(df.d));
  }
  if (counts.coefficient_sum() != df.product_of_sizes)
    throw InternalInconsistency("count total does not equal the product of sizes for " +
                                b.to_string());
  return {b, std::move(counts), std::move(counts_c), df.d};
}

/// Independent oracle for count_products: enumerate every tuple, multiply
/// left to right, tally. Exact and slow; capped.
template <typename Int = BigInt>
AlgebraVector<Int> count_products_bruteforce(const SubsetFamily& b,
                                             std::uint64_t cap = 10'000'000) {
  std::vector<Subset> members(b.begin(), b.end());
  return detail::bruteforce_counts<Int>(b.group(), members, cap);
}

enum class Decision {
  ProductIsG,
  ComplementProductIsG,
  ProductsEqual,
  Indeterminate,
};

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::ProductIsG: return "product-is-G";
    case Decision::ComplementProductIsG: return "complement-product-is-G";
    case Decision::ProductsEqual: return "products-equal";
    case Decision::Indeterminate: return "indeterminate";
  }
  return "?";
}

/// Sign-of-d covering decision. The returned claims are certificates:
///   n even, d > 0  =>  A_1...A_n = G        (every N_B(g) >= d > 0)
///   n even, d < 0  =>  complements' product = G
///   d = 0          =>  n is even and the two products coincide
///   n odd, d != 0  =>  no conclusion from d alone
inline Decision decide_by_sign(const SubsetFamily& b) {
  BigInt d = d_of_family(b);
  const bool even = b.size() % 2 == 0;
  if (d == 0) {
    if (!even)
      throw InternalInconsistency("d(B) = 0 with odd n for family " + b.to_string());
    return Decision::ProductsEqual;
  }
  if (!even) return Decision::Indeterminate;
  return d > 0 ? Decision::ProductIsG : Decision::ComplementProductIsG;
}

enum class PairClass { Above, Below, Equal };

inline const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::Above: return "above";
    case PairClass::Below: return "below";
    case PairClass::Equal: return "equal";
  }
  return "?";
}

/// Two-subset trichotomy on |A_1| + |A_2| vs |G|:
///   Above:  A_1 A_2 = G
///   Below:  complement(A_1) complement(A_2) = G
///   Equal:  A_1 A_2 = complement(A_1) complement(A_2)
inline PairClass mann_pair(const Subset& a1, const Subset& a2) {
  require_same_group(a1.group(), a2.group(), "mann_pair");
  if (a1.is_empty() || a2.is_empty()) throw EmptySubset("mann_pair needs nonempty subsets");
  const int s = a1.size() + a2.size() - a1.group()->order();
  if (s > 0) return PairClass::Above;
  if (s < 0) return PairClass::Below;
  return PairClass::Equal;
}

/// n-subset covering decision from pairwise cardinality sums:
///   some |A_i| + |A_j| > |G| (i != j)  =>  the product is G
///   some |A_i| + |A_j| < |G| (i != j)  =>  the complements' product is G
///   all pairwise sums equal |G|        =>  genuinely undecided by sizes alone
inline Decision theorem3_decide(const SubsetFamily& b) {
  if (b.size() < 2) throw Error("theorem3_decide needs a family of at least two subsets");
  const int order = b.group()->order();
  bool above = false, below = false;
  for (int i = 0; i < b.size(); ++i)
    for (int j = i + 1; j < b.size(); ++j) {
      const int s = b[i].size() + b[j].size();
      above = above || s > order;
      below = below || s < order;
    }
  if (above) return Decision::ProductIsG;
  if (below) return Decision::ComplementProductIsG;
  return Decision::Indeterminate;
}

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;  // reason for a failure or a skip; empty on pass
};

/// Outcome of running the counting-identity checks on one family.
struct VerificationReport {
  std::string group_description;
  int group_order = 0;
  std::string family;
  int n = 0;
  std::vector<int> sizes;
  std::vector<int> complement_sizes;
  BigInt d;
  std::vector<BigInt> counts;
  std::vector<BigInt> counts_complement;
  std::vector<CheckResult> checks;
  bool pass = false;
  std::optional<int> witness;  // first element where a coefficient check failed

  const CheckResult* check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Run every check the counting identity affords on one family: the
/// per-element identity, its restatement as a vector identity in ZG, the
/// coefficient totals, integrality of d, and agreement with the brute-force
/// oracle when the tuple count is under the cap. Failures are report
/// content, not exceptions: a Fail here means a library bug, and the report
/// is the diagnostic.
inline VerificationReport verify_theorem2(const SubsetFamily& b,
                                          std::uint64_t bruteforce_cap = 10'000'000) {
  VerificationReport rep;
  const GroupPtr& gp = b.group();
  const int order = gp->order();
  const bool even = b.size() % 2 == 0;
  rep.group_description = gp->description();
  rep.group_order = order;
  rep.family = b.to_string();
  rep.n = b.size();
  BigInt prod_a(1), prod_abar(1);
  for (const Subset& s : b) {
    rep.sizes.push_back(s.size());
    rep.complement_sizes.push_back(order - s.size());
    prod_a *= s.size();
    prod_abar *= order - s.size();
  }
  BigInt numerator = even ? BigInt(prod_a - prod_abar) : BigInt(prod_a + prod_abar);
  const bool divisible = numerator % order == 0;
  rep.d = numerator / order;
  rep.checks.push_back({"corollary1_integrality",
                        divisible ? CheckStatus::Pass : CheckStatus::Fail,
                        divisible ? "" : "numerator " + numerator.str() +
                                             " not divisible by " + std::to_string(order)});

  std::vector<Subset> members(b.begin(), b.end());
  auto counts = detail::fold_indicators<BigInt>(members);
  auto counts_c = detail::fold_indicators<BigInt>(b.complements());
  rep.counts = counts.coefficients();
  rep.counts_complement = counts_c.coefficients();

  {
    CheckResult c{"theorem2_identity", CheckStatus::Pass, ""};
    for (int g = 0; g < order; ++g) {
      BigInt lhs = even ? BigInt(counts[g] - counts_c[g]) : BigInt(counts[g] + counts_c[g]);
      if (lhs != rep.d) {
        c.status = CheckStatus::Fail;
        c.detail = "at g=" + gp->element_name(g) + ": N_B=" + counts[g].str() +
                   ", N_complement=" + counts_c[g].str() + ", difference " + lhs.str() +
                   " != d=" + rep.d.str();
        rep.witness = g;
        break;
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {
    // Same identity assembled as vectors in ZG: fold[A_i] -+ fold[complements]
    // must equal d times the indicator of the whole group.
    auto signed_c = counts_c.scaled(even ? BigInt(-1) : BigInt(1));
    auto lhs = counts + signed_c;
    auto rhs = indicator<BigInt>(Subset::full(gp)).scaled(rep.d);
    const bool ok = lhs == rhs;
    rep.checks.push_back({"eq4_vector_identity",
                          ok ? CheckStatus::Pass : CheckStatus::Fail,
                          ok ? "" : "vector identity in ZG does not hold"});
  }

  {
    const bool ok1 = counts.coefficient_sum() == prod_a;
    const bool ok2 = counts_c.coefficient_sum() == prod_abar;
    rep.checks.push_back({"coefficient_sums",
                          ok1 && ok2 ? CheckStatus::Pass : CheckStatus::Fail,
                          ok1 && ok2 ? ""
                                     : "count totals do not match the size products"});
  }

  auto bf_check = [&](const std::string& name, const std::vector<Subset>& mem,
                      const AlgebraVector<BigInt>& expect) {
    BigInt tuples(1);
    for (const Subset& s : mem) tuples *= s.size();
    if (tuples > BigInt(bruteforce_cap)) {
      rep.checks.push_back({name, CheckStatus::Skipped,
                            tuples.str() + " tuples exceed cap " +
                                std::to_string(bruteforce_cap)});
      return;
    }
    auto got = detail::bruteforce_counts<BigInt>(gp, mem, bruteforce_cap);
    const bool ok = got == expect;
    rep.checks.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Fail,
                          ok ? "" : "enumeration disagrees with convolution"});
  };
  bf_check("bruteforce_counts", members, counts);
  bf_check("bruteforce_complement_counts", b.complements(), counts_c);

  rep.pass = true;
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.status != CheckStatus::Fail;
  return rep;
}

}  // namespace cayley
