#pragma once

// Shared fixtures and independent oracles for the test suites. Oracles here
// are deliberately naive (dense double loops, no bit tricks) so they cannot
// share a bug with the kernels they check.

#include <cstdint>
#include <random>
#include <vector>

#include "cayley/cayley.hpp"

namespace testsupport {

using namespace cayley;

/// Quaternion group as an explicit table: 1, -1, i, -i, j, -j, k, -k.
inline const std::vector<std::vector<int>>& q8_table() {
  static const std::vector<std::vector<int>> t = {
      {0, 1, 2, 3, 4, 5, 6, 7},
      {1, 0, 3, 2, 5, 4, 7, 6},
      {2, 3, 1, 0, 6, 7, 5, 4},
      {3, 2, 0, 1, 7, 6, 4, 5},
      {4, 5, 7, 6, 1, 0, 2, 3},
      {5, 4, 6, 7, 0, 1, 3, 2},
      {6, 7, 4, 5, 3, 2, 1, 0},
      {7, 6, 5, 4, 2, 3, 0, 1},
  };
  return t;
}

inline GroupPtr q8() {
  return Group::from_cayley_table(q8_table(), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"},
                                  "q8");
}

/// Dense membership-array product, the oracle for the bit kernel.
inline Subset naive_product(const Subset& a, const Subset& b) {
  const Group& g = *a.group();
  const int n = g.order();
  std::vector<char> in_a(n, 0), in_b(n, 0), out(n, 0);
  for (int i = 0; i < n; ++i) {
    in_a[i] = a.contains(i);
    in_b[i] = b.contains(i);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (in_a[x] && in_b[y]) out[g.mul(x, y)] = 1;
  Bitset m(n);
  for (int i = 0; i < n; ++i)
    if (out[i]) m.set(i);
  return {a.group(), std::move(m)};
}

/// All nonempty subsets of a group of order <= 20, by mask enumeration.
inline std::vector<Subset> all_nonempty_subsets(const GroupPtr& g) {
  const int n = g->order();
  std::vector<Subset> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Bitset m(n);
    for (int i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) m.set(i);
    out.emplace_back(g, std::move(m));
  }
  return out;
}

inline Subset random_nonempty_subset(std::mt19937_64& rng, const GroupPtr& g) {
  const int n = g->order();
  Bitset m(n);
  do {
    for (int i = 0; i < n; ++i)
      if (rng() & 1) m.set(i); else m.reset(i);
  } while (m.none());
  return {g, std::move(m)};
}

inline SubsetFamily random_family(std::mt19937_64& rng, const GroupPtr& g, int n) {
  std::vector<Subset> members;
  members.reserve(n);
  for (int i = 0; i < n; ++i) members.push_back(random_nonempty_subset(rng, g));
  return SubsetFamily(std::move(members));
}

/// Small-group pool used by randomized sweeps.
inline std::vector<GroupPtr> small_group_pool() {
  std::vector<GroupPtr> pool;
  for (int n = 2; n <= 12; ++n) pool.push_back(Group::cyclic(n));
  pool.push_back(Group::elementary_abelian(2, 2));
  pool.push_back(Group::elementary_abelian(3, 3));
  pool.push_back(Group::symmetric(3));
  pool.push_back(Group::dihedral(4));
  pool.push_back(q8());
  return pool;
}

}  // namespace testsupport
