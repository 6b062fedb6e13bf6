#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cayley/bitset.hpp"
#include "cayley/errors.hpp"
#include "cayley/group.hpp"

namespace cayley {

/// A subset of a group as a boolean mask with cached cardinality. Immutable.
class Subset {
public:
  Subset(GroupPtr group, Bitset mask)
      : group_(std::move(group)), mask_(std::move(mask)), card_(mask_.count()) {
    if (mask_.bits() != group_->order())
      throw Error("mask width " + std::to_string(mask_.bits()) +
                  " does not match group order " + std::to_string(group_->order()));
  }

  static Subset empty(GroupPtr g) {
    Bitset m(g->order());
    return {std::move(g), std::move(m)};
  }

  static Subset full(GroupPtr g) {
    Bitset m(g->order());
    for (int i = 0; i < m.bits(); ++i) m.set(i);
    return {std::move(g), std::move(m)};
  }

  static Subset of(GroupPtr g, std::span<const int> elements) {
    Bitset m(g->order());
    for (int e : elements) {
      if (e < 0 || e >= g->order())
        throw InvalidSpec("element " + std::to_string(e) +
                          " out of range for group of order " +
                          std::to_string(g->order()));
      m.set(e);
    }
    return {std::move(g), std::move(m)};
  }

  static Subset of(GroupPtr g, std::initializer_list<int> elements) {
    return of(std::move(g), std::span<const int>(elements.begin(), elements.size()));
  }

  const GroupPtr& group() const { return group_; }
  const Bitset& mask() const { return mask_; }
  int size() const { return card_; }
  bool is_empty() const { return card_ == 0; }
  bool is_full() const { return card_ == group_->order(); }
  bool contains(int e) const { return mask_.test(e); }
  std::vector<int> elements() const { return mask_.to_indices(); }

  bool operator==(const Subset& o) const {
    return group_->id() == o.group_->id() && mask_ == o.mask_;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    mask_.for_each_set([&](int i) {
      if (!first) s += ",";
      s += group_->element_name(i);
      first = false;
    });
    return s + "}";
  }

private:
  GroupPtr group_;
  Bitset mask_;
  int card_;
};

/// A . B = { a.b : a in A, b in B }. Empty if either operand is empty.
/// Iterates the set bits of the smaller operand and ORs in the translated
/// rows (or columns) of the Cayley table; bails out once the result is full.
inline Subset product(const Subset& a, const Subset& b) {
  require_same_group(a.group(), b.group(), "product");
  const Group& g = *a.group();
  const int n = g.order();
  Bitset out(n);
  if (a.is_empty() || b.is_empty()) return {a.group(), std::move(out)};
  if (a.size() <= b.size()) {
    bool done = false;
    a.mask().for_each_set([&](int x) {
      if (done) return;
      b.mask().for_each_set([&](int y) { out.set(g.mul(x, y)); });
      if (out.count() == n) done = true;
    });
  } else {
    bool done = false;
    b.mask().for_each_set([&](int y) {
      if (done) return;
      a.mask().for_each_set([&](int x) { out.set(g.mul(x, y)); });
      if (out.count() == n) done = true;
    });
  }
  return {a.group(), std::move(out)};
}

inline Subset complement(const Subset& a) {
  return {a.group(), a.mask().complemented()};
}

inline Subset inverse_set(const Subset& a) {
  const Group& g = *a.group();
  Bitset m(g.order());
  a.mask().for_each_set([&](int x) { m.set(g.inv(x)); });
  return {a.group(), std::move(m)};
}

/// A^k, the k-fold product of a with itself.
inline Subset power(const Subset& a, int k) {
  if (a.is_empty()) throw EmptySubset("power of an empty subset");
  if (k < 1) throw Error("power exponent must be >= 1, got " + std::to_string(k));
  Subset x = a;
  for (int i = 1; i < k; ++i) x = product(x, a);
  return x;
}

inline bool is_subgroup(const Subset& s) {
  if (s.is_empty() || !s.contains(s.group()->identity())) return false;
  const Group& g = *s.group();
  bool closed = true;
  s.mask().for_each_set([&](int x) {
    if (!s.contains(g.inv(x))) closed = false;
    s.mask().for_each_set([&](int y) {
      if (!s.contains(g.mul(x, y))) closed = false;
    });
  });
  return closed;
}

struct StabilizationReport {
  struct Cycle {
    int start;   // step index of the first repeated subset (1-based: A^start)
    int period;  // distance to its recurrence
  };
  bool stabilizes = false;
  std::optional<int> k;         // minimal k with A^k = G
  std::optional<Cycle> cycle;   // set when the power sequence loops below G
  std::vector<int> sizes;       // |A^1|, |A^2|, ... as visited
};

/// Does A, A^2, A^3, ... reach (and then stay at) the whole group? Follows
/// the power sequence, detecting either the full group or a revisited subset.
/// Visited masks are kept verbatim so a hash collision can never fabricate a
/// cycle. Default step budget is 4*|G|.
inline StabilizationReport stabilizes_at_group(const Subset& a, int max_steps = 0) {
  if (a.is_empty()) throw EmptySubset("stabilization of an empty subset");
  const int n = a.group()->order();
  if (max_steps <= 0) max_steps = 4 * n;
  StabilizationReport rep;
  std::unordered_map<Bitset, int, BitsetHash> seen;
  Subset x = a;
  int step = 1;
  rep.sizes.push_back(x.size());
  if (x.is_full()) {
    rep.stabilizes = true;
    rep.k = step;
    return rep;
  }
  seen.emplace(x.mask(), step);
  while (step < max_steps) {
    x = product(x, a);
    ++step;
    rep.sizes.push_back(x.size());
    if (x.is_full()) {
      rep.stabilizes = true;
      rep.k = step;
      return rep;
    }
    if (auto it = seen.find(x.mask()); it != seen.end()) {
      rep.cycle = StabilizationReport::Cycle{it->second, step - it->second};
      return rep;
    }
    seen.emplace(x.mask(), step);
  }
  throw Inconclusive(max_steps);
}

/// Ordered tuple B = (A_1, ..., A_n) of nonempty subsets of one group.
class SubsetFamily {
public:
  explicit SubsetFamily(std::vector<Subset> members) : members_(std::move(members)) {
    if (members_.empty()) throw Error("subset family needs at least one member");
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i].is_empty())
        throw EmptySubset("family member " + std::to_string(i + 1) + " is empty");
      require_same_group(members_[0].group(), members_[i].group(), "family");
    }
  }

  SubsetFamily(std::initializer_list<Subset> members)
      : SubsetFamily(std::vector<Subset>(members)) {}

  const GroupPtr& group() const { return members_[0].group(); }
  int size() const { return static_cast<int>(members_.size()); }
  const Subset& operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Complements of the members, in order. May contain empty subsets, so the
  /// result is a plain vector rather than a family.
  std::vector<Subset> complements() const {
    std::vector<Subset> out;
    out.reserve(members_.size());
    for (const auto& s : members_) out.push_back(complement(s));
    return out;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) s += ", ";
      s += members_[i].to_string();
    }
    return s + ")";
  }

private:
  std::vector<Subset> members_;
};

/// Left fold of the subset product over the family: A_1 . A_2 . ... . A_n.
inline Subset fold_product(const SubsetFamily& b) {
  Subset x = b[0];
  for (int i = 1; i < b.size(); ++i) x = product(x, b[i]);
  return x;
}

/// Same fold over an arbitrary subset list (members may be empty).
inline Subset fold_product(const std::vector<Subset>& members) {
  if (members.empty()) throw Error("fold of an empty subset list");
  Subset x = members[0];
  for (std::size_t i = 1; i < members.size(); ++i) x = product(x, members[i]);
  return x;
}

}  // namespace cayley
