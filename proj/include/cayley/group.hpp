#pragma once

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cayley/errors.hpp"

namespace cayley {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite group as an explicit Cayley table. Immutable once constructed;
/// every factory validates the group axioms before handing the object out.
/// The identity always sits at index 0 (user tables are relabeled if needed).
class Group {
  struct Private {};

public:
  using Element = std::int32_t;

  Group(Private, int order, std::vector<Element> table, std::vector<Element> inverses,
        std::vector<std::string> labels, std::string description)
      : order_(order),
        table_(std::move(table)),
        inv_(std::move(inverses)),
        labels_(std::move(labels)),
        description_(std::move(description)),
        id_(next_id()) {}

  int order() const { return order_; }
  Element identity() const { return 0; }

  Element mul(Element a, Element b) const {
    assert(a >= 0 && a < order_ && b >= 0 && b < order_);
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  Element inv(Element a) const {
    assert(a >= 0 && a < order_);
    return inv_[a];
  }

  /// Smallest k >= 1 with g^k = e.
  int element_order(Element g) const {
    int k = 1;
    for (Element x = g; x != 0; x = mul(x, g)) ++k;
    return k;
  }

  /// Unique per constructed group; copies of a GroupPtr share it. Used by
  /// subsets, vectors and distributions to reject cross-group operations.
  std::uint64_t id() const { return id_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::string element_name(Element g) const {
    assert(g >= 0 && g < order_);
    return labels_.empty() ? std::to_string(g) : labels_[g];
  }

  /// Constructor descriptor this group was built from, e.g. "cyclic:6".
  const std::string& description() const { return description_; }

  // -- factories ------------------------------------------------------------

  /// Validate an explicit table and build the group. The identity is located
  /// and relabeled to index 0; inverses are derived.
  static GroupPtr from_cayley_table(const std::vector<std::vector<int>>& table,
                                    std::vector<std::string> labels = {},
                                    std::string description = "") {
    const std::size_t n = table.size();
    if (n == 0) throw MalformedTable("table has no rows");
    for (std::size_t r = 0; r < n; ++r) {
      if (table[r].size() != n)
        throw MalformedTable("row " + std::to_string(r) + " has " +
                             std::to_string(table[r].size()) + " entries, expected " +
                             std::to_string(n));
      for (std::size_t c = 0; c < n; ++c)
        if (table[r][c] < 0 || static_cast<std::size_t>(table[r][c]) >= n)
          throw MalformedTable("entry at row " + std::to_string(r) + ", column " +
                               std::to_string(c) + " is out of range: " +
                               std::to_string(table[r][c]));
    }
    if (!labels.empty() && labels.size() != n)
      throw MalformedTable("got " + std::to_string(labels.size()) + " labels for " +
                           std::to_string(n) + " elements");
    std::vector<Element> flat(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        flat[r * n + c] = static_cast<Element>(table[r][c]);
    if (description.empty())
      description = "table(order " + std::to_string(n) + ")";
    return finalize(static_cast<int>(n), std::move(flat), std::move(labels),
                    std::move(description));
  }

  static GroupPtr cyclic(int n) {
    if (n < 1) throw InvalidSpec("cyclic group order must be >= 1");
    check_order_cap(n);
    std::vector<Element> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return finalize(n, std::move(t), {}, "cyclic:" + std::to_string(n));
  }

  static GroupPtr elementary_abelian(int p, int k) {
    if (!is_prime(p)) throw InvalidSpec("elementary abelian group needs a prime p, got " +
                                        std::to_string(p));
    if (k < 1) throw InvalidSpec("elementary abelian group needs k >= 1");
    std::int64_t ord = 1;
    for (int i = 0; i < k; ++i) {
      ord *= p;
      check_order_cap(ord);
    }
    const int n = static_cast<int>(ord);
    // index = sum of digit_i * p^i; multiplication adds digit vectors mod p
    std::vector<Element> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int x = a, y = b, pw = 1, r = 0;
        for (int i = 0; i < k; ++i) {
          r += ((x % p + y % p) % p) * pw;
          x /= p;
          y /= p;
          pw *= p;
        }
        t[static_cast<std::size_t>(a) * n + b] = r;
      }
    std::vector<std::string> labels;
    if (k <= 26) {
      labels.reserve(n);
      for (int a = 0; a < n; ++a) {
        std::string s;
        int x = a;
        for (int i = 0; i < k; ++i, x /= p) {
          int d = x % p;
          if (d == 0) continue;
          s += static_cast<char>('a' + i);
          if (d > 1) s += std::to_string(d);
        }
        labels.push_back(s.empty() ? "e" : s);
      }
    }
    return finalize(n, std::move(t), std::move(labels),
                    "ea:" + std::to_string(p) + "," + std::to_string(k));
  }

  static GroupPtr dihedral(int m) {
    if (m < 1) throw InvalidSpec("dihedral group needs m >= 1");
    check_order_cap(2 * static_cast<std::int64_t>(m));
    const int n = 2 * m;
    // element (a, b) = r^a s^b at index b*m + a;  s r = r^-1 s
    auto idx = [m](int a, int b) { return b * m + a; };
    std::vector<Element> t(static_cast<std::size_t>(n) * n);
    for (int a1 = 0; a1 < m; ++a1)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int a2 = 0; a2 < m; ++a2)
          for (int b2 = 0; b2 < 2; ++b2) {
            int a = b1 == 0 ? (a1 + a2) % m : (a1 - a2 + m) % m;
            t[static_cast<std::size_t>(idx(a1, b1)) * n + idx(a2, b2)] = idx(a, b1 ^ b2);
          }
    std::vector<std::string> labels(n);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < 2; ++b) {
        std::string s;
        if (a == 1)
          s = "r";
        else if (a > 1)
          s = "r" + std::to_string(a);
        if (b) s += "s";
        labels[idx(a, b)] = s.empty() ? "e" : s;
      }
    return finalize(n, std::move(t), std::move(labels), "dihedral:" + std::to_string(m));
  }

  static GroupPtr symmetric(int m) {
    if (m < 1 || m > 8)
      throw InvalidSpec("symmetric group degree must be in 1..8, got " + std::to_string(m));
    std::vector<std::vector<int>> perms;
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int n = static_cast<int>(perms.size());
    std::unordered_map<std::uint64_t, int> rank;
    rank.reserve(perms.size() * 2);
    for (int i = 0; i < n; ++i) rank.emplace(pack_perm(perms[i]), i);
    std::vector<Element> t(static_cast<std::size_t>(n) * n);
    std::vector<int> comp(m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int x = 0; x < m; ++x) comp[x] = perms[i][perms[j][x]];
        t[static_cast<std::size_t>(i) * n + j] = rank.at(pack_perm(comp));
      }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (auto& q : perms) labels.push_back(cycle_notation(q));
    return finalize(n, std::move(t), std::move(labels), "sym:" + std::to_string(m));
  }

  static GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h) {
    if (!g || !h) throw InvalidSpec("direct product of null group");
    const std::int64_t ord = static_cast<std::int64_t>(g->order()) * h->order();
    check_order_cap(ord);
    const int n = static_cast<int>(ord);
    const int hn = h->order();
    std::vector<Element> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Element x = g->mul(a / hn, b / hn);
        Element y = h->mul(a % hn, b % hn);
        t[static_cast<std::size_t>(a) * n + b] = x * hn + y;
      }
    std::vector<std::string> labels;
    if (g->has_labels() && h->has_labels()) {
      labels.reserve(n);
      for (int a = 0; a < n; ++a)
        labels.push_back(g->labels()[a / hn] + "." + h->labels()[a % hn]);
    }
    return finalize(n, std::move(t), std::move(labels),
                    "prod(" + g->description() + "," + h->description() + ")");
  }

  /// Breadth-first closure of permutation generators (images of 0..d-1).
  static GroupPtr from_permutations(const std::vector<std::vector<int>>& generators,
                                    std::size_t closure_cap = 1'000'000,
                                    std::string description = "") {
    if (generators.empty()) throw InvalidSpec("need at least one permutation generator");
    const std::size_t degree = generators[0].size();
    if (degree == 0) throw InvalidSpec("permutation generator of degree 0");
    for (const auto& g : generators) {
      if (g.size() != degree)
        throw InvalidSpec("permutation generators have mixed degrees");
      std::vector<char> seen(degree, 0);
      for (int v : g) {
        if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[v])
          throw InvalidSpec("generator is not a permutation of 0.." +
                            std::to_string(degree - 1));
        seen[v] = 1;
      }
    }
    std::vector<std::vector<int>> elems;
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;  // hash -> elem indices
    auto find = [&](const std::vector<int>& q) -> int {
      auto it = buckets.find(hash_perm(q));
      if (it == buckets.end()) return -1;
      for (int i : it->second)
        if (elems[i] == q) return i;
      return -1;
    };
    auto insert = [&](std::vector<int> q) {
      buckets[hash_perm(q)].push_back(static_cast<int>(elems.size()));
      elems.push_back(std::move(q));
    };
    std::vector<int> ident(degree);
    std::iota(ident.begin(), ident.end(), 0);
    insert(ident);
    std::vector<int> comp(degree);
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (const auto& g : generators) {
        for (std::size_t x = 0; x < degree; ++x) comp[x] = elems[head][g[x]];
        if (find(comp) < 0) {
          if (elems.size() >= closure_cap) throw ClosureTooLarge(closure_cap);
          insert(comp);
        }
      }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<Element> t(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (std::size_t x = 0; x < degree; ++x) comp[x] = elems[i][elems[j][x]];
        t[static_cast<std::size_t>(i) * n + j] = find(comp);
      }
    if (description.empty())
      description = "perm(order " + std::to_string(n) + ")";
    return finalize(n, std::move(t), {}, std::move(description));
  }

private:
  friend void validate_group_axioms(const Group&);

  static std::uint64_t next_id() {
    static std::atomic<std::uint64_t> counter{0};
    return counter.fetch_add(1, std::memory_order_relaxed);
  }

  static bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<std::int64_t>(d) * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  // Guard against table allocations that cannot possibly fit in memory.
  static void check_order_cap(std::int64_t ord) {
    if (ord > (1 << 20))
      throw InvalidSpec("group order " + std::to_string(ord) +
                        " exceeds the 2^20 table cap");
  }

  static std::uint64_t pack_perm(const std::vector<int>& p) {
    std::uint64_t v = 0;
    for (int x : p) v = (v << 4) | static_cast<std::uint64_t>(x);
    return v;
  }

  static std::uint64_t hash_perm(const std::vector<int>& p) {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : p) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    }
    return h;
  }

  static std::string cycle_notation(const std::vector<int>& p) {
    std::string s;
    std::vector<char> done(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (done[i] || p[i] == static_cast<int>(i)) continue;
      s += '(';
      std::size_t j = i;
      while (!done[j]) {
        done[j] = 1;
        s += std::to_string(j);
        j = static_cast<std::size_t>(p[j]);
      }
      s += ')';
    }
    return s.empty() ? "e" : s;
  }

  // Shared tail of every factory: locate identity, relabel it to index 0,
  // derive inverses, check all group axioms.
  static GroupPtr finalize(int n, std::vector<Element> table,
                           std::vector<std::string> labels, std::string description) {
    check_latin(n, table);
    int e = locate_identity(n, table);
    if (e != 0) {
      // relabel by the transposition 0 <-> e
      auto sig = [e](Element x) -> Element { return x == 0 ? e : (x == e ? 0 : x); };
      std::vector<Element> t2(table.size());
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          t2[static_cast<std::size_t>(a) * n + b] =
              sig(table[static_cast<std::size_t>(sig(a)) * n + sig(b)]);
      table = std::move(t2);
      if (!labels.empty()) std::swap(labels[0], labels[e]);
    }
    std::vector<Element> inverses = derive_inverses(n, table);
    check_associativity(n, table);
    return std::make_shared<const Group>(Private{}, n, std::move(table),
                                         std::move(inverses), std::move(labels),
                                         std::move(description));
  }

  static void check_latin(int n, const std::vector<Element>& t) {
    std::vector<int> first(n);
    for (int r = 0; r < n; ++r) {
      std::fill(first.begin(), first.end(), -1);
      for (int c = 0; c < n; ++c) {
        Element v = t[static_cast<std::size_t>(r) * n + c];
        if (first[v] >= 0)
          throw NotAGroup("row " + std::to_string(r) + " repeats value " +
                          std::to_string(v) + " (columns " + std::to_string(first[v]) +
                          " and " + std::to_string(c) + ")");
        first[v] = c;
      }
    }
    for (int c = 0; c < n; ++c) {
      std::fill(first.begin(), first.end(), -1);
      for (int r = 0; r < n; ++r) {
        Element v = t[static_cast<std::size_t>(r) * n + c];
        if (first[v] >= 0)
          throw NotAGroup("column " + std::to_string(c) + " repeats value " +
                          std::to_string(v) + " (rows " + std::to_string(first[v]) +
                          " and " + std::to_string(r) + ")");
        first[v] = r;
      }
    }
  }

  static int locate_identity(int n, const std::vector<Element>& t) {
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int g = 0; g < n && ok; ++g)
        ok = t[static_cast<std::size_t>(e) * n + g] == g &&
             t[static_cast<std::size_t>(g) * n + e] == g;
      if (ok) return e;
    }
    throw NotAGroup("no two-sided identity element");
  }

  static std::vector<Element> derive_inverses(int n, const std::vector<Element>& t) {
    std::vector<Element> inv(n, -1);
    for (int g = 0; g < n; ++g) {
      for (int h = 0; h < n; ++h)
        if (t[static_cast<std::size_t>(g) * n + h] == 0) {
          if (t[static_cast<std::size_t>(h) * n + g] != 0)
            throw NotAGroup("element " + std::to_string(g) +
                            " has right inverse " + std::to_string(h) +
                            " which is not a left inverse");
          inv[g] = h;
          break;
        }
      if (inv[g] < 0)
        throw NotAGroup("element " + std::to_string(g) + " has no right inverse");
    }
    return inv;
  }

  // Full O(n^3) check up to order 256, >= 10*n^2 sampled triples above.
  static void check_associativity(int n, const std::vector<Element>& t) {
    auto m = [&](Element a, Element b) { return t[static_cast<std::size_t>(a) * n + b]; };
    auto fail = [](Element a, Element b, Element c) {
      throw NotAGroup("associativity fails at triple (" + std::to_string(a) + ", " +
                      std::to_string(b) + ", " + std::to_string(c) + ")");
    };
    if (n <= 256) {
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c)
            if (m(m(a, b), c) != m(a, m(b, c))) fail(a, b, c);
      return;
    }
    std::mt19937_64 rng(0x5eedc0de ^ static_cast<std::uint64_t>(n));
    std::uint64_t samples = 10ULL * n * n;
    for (std::uint64_t i = 0; i < samples; ++i) {
      Element a = static_cast<Element>(rng() % n);
      Element b = static_cast<Element>(rng() % n);
      Element c = static_cast<Element>(rng() % n);
      if (m(m(a, b), c) != m(a, m(b, c))) fail(a, b, c);
    }
  }

  int order_;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
  std::string description_;
  std::uint64_t id_;
};

/// Re-run the full axiom suite on a finished group. Factories already do this;
/// exposed so test sweeps can assert it independently.
inline void validate_group_axioms(const Group& g) {
  const int n = g.order();
  Group::check_latin(n, g.table_);
  if (Group::locate_identity(n, g.table_) != 0)
    throw NotAGroup("identity is not at index 0");
  for (int x = 0; x < n; ++x)
    if (g.mul(x, g.inv(x)) != 0 || g.mul(g.inv(x), x) != 0)
      throw NotAGroup("stored inverse of " + std::to_string(x) + " is wrong");
  Group::check_associativity(n, g.table_);
}

inline void require_same_group(const GroupPtr& a, const GroupPtr& b,
                               const char* op) {
  if (a->id() != b->id())
    throw GroupMismatch(std::string(op) + ": operands belong to different groups (" +
                        a->description() + " vs " + b->description() + ")");
}

/// An element bound to its group; the checked, user-facing counterpart of the
/// raw Group::Element indices used in kernels.
class GroupElement {
public:
  GroupElement(GroupPtr group, Group::Element index)
      : group_(std::move(group)), index_(index) {
    if (index_ < 0 || index_ >= group_->order())
      throw InvalidSpec("element index " + std::to_string(index_) +
                        " out of range for group of order " +
                        std::to_string(group_->order()));
  }

  const GroupPtr& group() const { return group_; }
  Group::Element index() const { return index_; }
  std::string name() const { return group_->element_name(index_); }

  bool operator==(const GroupElement& o) const {
    return group_->id() == o.group_->id() && index_ == o.index_;
  }

private:
  GroupPtr group_;
  Group::Element index_;
};

inline GroupElement mul(const GroupElement& a, const GroupElement& b) {
  require_same_group(a.group(), b.group(), "mul");
  return {a.group(), a.group()->mul(a.index(), b.index())};
}

inline GroupElement inv(const GroupElement& a) {
  return {a.group(), a.group()->inv(a.index())};
}

inline GroupElement identity(const GroupPtr& g) { return {g, g->identity()}; }

}  // namespace cayley
