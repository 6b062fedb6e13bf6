#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cayley/errors.hpp"
#include "cayley/group.hpp"
#include "cayley/numeric.hpp"
#include "cayley/subset.hpp"

namespace cayley {

namespace detail {

template <typename W>
W abs_weight(const W& v) {
  if constexpr (std::is_floating_point_v<W>)
    return std::abs(v);
  else
    return v < W(0) ? W(-v) : v;
}

template <typename W>
bool sums_to_one(const W& total) {
  if constexpr (std::is_floating_point_v<W>)
    return std::abs(total - W(1)) <= 1e-12;
  else
    return total == W(1);
}

}  // namespace detail

/// Probability on a group: one nonnegative weight per element, summing to
/// one (exactly for the Rational default, within 1e-12 for the float
/// backend). Immutable.
template <typename W = Rational>
class Distribution {
public:
  Distribution(GroupPtr group, std::vector<W> weights)
      : group_(std::move(group)), w_(std::move(weights)) {
    if (static_cast<int>(w_.size()) != group_->order())
      throw Error("weight vector length does not match group order");
    W total(0);
    for (const W& v : w_) {
      if (v < W(0)) throw Error("negative probability weight");
      total += v;
    }
    if (!detail::sums_to_one(total))
      throw Error("probability weights do not sum to 1");
  }

  static Distribution uniform(GroupPtr g) {
    const int n = g->order();
    std::vector<W> w(static_cast<std::size_t>(n), W(1) / W(n));
    return {std::move(g), std::move(w)};
  }

  static Distribution uniform_on(const Subset& a) {
    if (a.is_empty()) throw EmptySubset("uniform_on needs a nonempty carrier");
    std::vector<W> w(static_cast<std::size_t>(a.group()->order()), W(0));
    a.mask().for_each_set([&](int g) { w[static_cast<std::size_t>(g)] = W(1) / W(a.size()); });
    return {a.group(), std::move(w)};
  }

  static Distribution point_mass(GroupPtr g, int at) {
    if (at < 0 || at >= g->order()) throw InvalidSpec("point mass element out of range");
    std::vector<W> w(static_cast<std::size_t>(g->order()), W(0));
    w[static_cast<std::size_t>(at)] = W(1);
    return {std::move(g), std::move(w)};
  }

  const GroupPtr& group() const { return group_; }
  int order() const { return group_->order(); }
  const W& operator[](int g) const { return w_[static_cast<std::size_t>(g)]; }
  const std::vector<W>& weights() const { return w_; }

  bool operator==(const Distribution& o) const {
    return group_->id() == o.group_->id() && w_ == o.w_;
  }

private:
  GroupPtr group_;
  std::vector<W> w_;
};

/// The carrier (support) { g : P(g) != 0 }.
template <typename W>
Subset carrier(const Distribution<W>& p) {
  Bitset m(p.order());
  for (int g = 0; g < p.order(); ++g)
    if (p[g] != W(0)) m.set(g);
  return {p.group(), std::move(m)};
}

/// (p * q)(g) = sum over x.y = g of p(x) q(y).
template <typename W>
Distribution<W> convolve(const Distribution<W>& p, const Distribution<W>& q) {
  require_same_group(p.group(), q.group(), "convolve");
  const Group& grp = *p.group();
  const int n = grp.order();
  std::vector<W> out(static_cast<std::size_t>(n), W(0));
  for (int x = 0; x < n; ++x) {
    if (p[x] == W(0)) continue;
    for (int y = 0; y < n; ++y) {
      if (q[y] == W(0)) continue;
      out[static_cast<std::size_t>(grp.mul(x, y))] += p[x] * q[y];
    }
  }
  return {p.group(), std::move(out)};
}

/// P^(n) by iterated convolution with the base distribution.
template <typename W>
Distribution<W> n_fold(const Distribution<W>& p, int n) {
  if (n < 1) throw Error("n_fold needs n >= 1");
  Distribution<W> q = p;
  for (int i = 1; i < n; ++i) q = convolve(q, p);
  return q;
}

/// P^(n) by repeated squaring; same result as n_fold, no intermediate trace.
template <typename W>
Distribution<W> n_fold_pow(const Distribution<W>& p, int n) {
  if (n < 1) throw Error("n_fold_pow needs n >= 1");
  Distribution<W> base = p;
  std::optional<Distribution<W>> acc;
  while (n > 0) {
    if (n & 1) acc = acc ? convolve(*acc, base) : base;
    n >>= 1;
    if (n > 0) base = convolve(base, base);
  }
  return *acc;
}

/// Total variation distance (1/2) sum |p(g) - q(g)|.
template <typename W>
W tv_distance(const Distribution<W>& p, const Distribution<W>& q) {
  require_same_group(p.group(), q.group(), "tv_distance");
  W s(0);
  for (int g = 0; g < p.order(); ++g) s += detail::abs_weight(W(p[g] - q[g]));
  return s / W(2);
}

template <typename W>
W tv_to_uniform(const Distribution<W>& p) {
  return tv_distance(p, Distribution<W>::uniform(p.group()));
}

/// Convergence of P^(n) to uniform, juxtaposed with carrier stabilization.
/// The two findings are reported side by side; nothing about their
/// equivalence is assumed.
template <typename W = Rational>
struct ConvergenceReport {
  bool converged = false;
  std::optional<int> n_at_tol;  // first n with tv < tol
  std::vector<W> tv_trace;      // tv(P^(n), U) for n = 1, 2, ...
  StabilizationReport stabilization;
};

template <typename W>
ConvergenceReport<W> convergence_probe(const Distribution<W>& p, const W& tol,
                                       int max_n = 1000, int stabilization_max_steps = 0) {
  if (!(tol > W(0))) throw Error("tolerance must be positive");
  if (max_n < 1) throw Error("max_n must be >= 1");
  ConvergenceReport<W> rep;
  Distribution<W> q = p;
  for (int n = 1; n <= max_n; ++n) {
    W tv = tv_to_uniform(q);
    rep.tv_trace.push_back(tv);
    if (tv < tol) {
      rep.converged = true;
      rep.n_at_tol = n;
      break;
    }
    if (n < max_n) q = convolve(q, p);
  }
  rep.stabilization = stabilizes_at_group(carrier(p), stabilization_max_steps);
  return rep;
}

}  // namespace cayley
