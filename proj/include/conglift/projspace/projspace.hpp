#pragma once

#include "conglift/error.hpp"
#include "conglift/exactring/euclid.hpp"
#include "conglift/exactring/quotient_ring.hpp"
#include "conglift/lifting/residue_lift.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace conglift {

/// Weights (m_0, ..., m_k) of a generalized projective space, all >= 1.
class WeightVector {
public:
  WeightVector() = default;
  explicit WeightVector(std::vector<std::uint64_t> w) : w_(std::move(w)) {
    if (w_.empty()) fail(Errc::invalid_argument, "empty weight vector");
    for (auto m : w_)
      if (m == 0) fail(Errc::invalid_argument, "weights must be positive");
  }
  static WeightVector ones(std::size_t n) {
    return WeightVector(std::vector<std::uint64_t>(n, 1));
  }

  std::size_t size() const { return w_.size(); }
  std::uint64_t operator[](std::size_t i) const { return w_[i]; }
  const std::vector<std::uint64_t> &values() const { return w_; }

  friend bool operator==(const WeightVector &, const WeightVector &) = default;

private:
  std::vector<std::uint64_t> w_;
};

/// A point [a_0 : ... : a_k] of PF^{k,w}_I. `rep` is unital over the base
/// ring. Over the unit ideal the space has a single point, flagged
/// `singleton` with an empty rep.
template <EuclideanDomain B> struct ProjPoint {
  Ideal<B> ideal;
  WeightVector weights;
  std::vector<elem_t<B>> rep;
  bool singleton = false;

  friend bool operator==(const ProjPoint &, const ProjPoint &) = default;
};

/// The entries generate the unit ideal of the base ring.
template <EuclideanDomain B>
bool is_unital_tuple(const B &r, std::span<const elem_t<B>> t) {
  if (t.empty()) fail(Errc::invalid_argument, "empty tuple");
  return r.is_unit(gcd_all<B>(r, t));
}

/// Exponent of the unit group of a finite quotient (lcm of element orders).
template <EuclideanDomain B>
std::uint64_t unit_group_exponent(const QuotientRing<B> &q) {
  std::uint64_t e = 1;
  for (const auto &u : unit_list(q)) {
    std::uint64_t order = 1;
    auto x = u;
    while (x != q.one()) {
      x = q.mul(x, u);
      ++order;
    }
    e = std::lcm(e, order);
  }
  return e;
}

/// The unit group of R/I acting on residue tuples by
/// lambda . (a_i) = (lambda^{m_i} a_i). Weights are reduced modulo the unit
/// group exponent (0 maps to the exponent) before powers are taken.
template <EuclideanDomain B> class WeightedAction {
public:
  using V = elem_t<B>;

  WeightedAction(QuotientRing<B> q, const WeightVector &w) : q_(std::move(q)) {
    q_.require_finite();
    units_ = unit_list(q_);
    const std::uint64_t e = unit_group_exponent(q_);
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t m = w[i] % e;
      reduced_.push_back(m == 0 ? e : m);
    }
    for (const auto &u : units_) {
      std::vector<V> row;
      for (auto m : reduced_) {
        V p = q_.one();
        for (std::uint64_t j = 0; j < m; ++j) p = q_.mul(p, u);
        row.push_back(std::move(p));
      }
      powers_.push_back(std::move(row));
    }
  }

  const QuotientRing<B> &ring() const { return q_; }
  const std::vector<std::uint64_t> &reduced_weights() const { return reduced_; }
  std::size_t dimension() const { return reduced_.size(); }

  std::vector<V> act(std::size_t unit_index, std::span<const V> a) const {
    std::vector<V> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      out.push_back(q_.mul(powers_[unit_index][i], a[i]));
    return out;
  }

  /// Some unit lambda with a_i = lambda^{m_i} b_i for all i.
  bool related(std::span<const V> a, std::span<const V> b) const {
    for (std::size_t u = 0; u < units_.size(); ++u)
      if (std::ranges::equal(reduce_all(a), act(u, reduce_all(b)))) return true;
    return false;
  }

  /// Lexicographically smallest residue tuple in the orbit.
  std::vector<V> orbit_min(std::span<const V> a) const {
    const auto base = reduce_all(a);
    std::vector<V> best = base;
    for (std::size_t u = 0; u < units_.size(); ++u) {
      auto cand = act(u, base);
      if (lex_less(cand, best)) best = std::move(cand);
    }
    return best;
  }

  bool lex_less(std::span<const V> a, std::span<const V> b) const {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [this](const V &x, const V &y) { return q_.less(x, y); });
  }

private:
  std::vector<V> reduce_all(std::span<const V> a) const {
    std::vector<V> out;
    for (const auto &x : a) out.push_back(q_.reduce(x));
    return out;
  }

  QuotientRing<B> q_;
  std::vector<V> units_;
  std::vector<std::uint64_t> reduced_;
  std::vector<std::vector<V>> powers_;
};

namespace detail {

template <EuclideanDomain B>
void check_tuple(const Ideal<B> &ideal, std::span<const elem_t<B>> a,
                 const WeightVector &w) {
  if (a.size() != w.size())
    fail(Errc::shape_mismatch, "tuple length " + std::to_string(a.size()) +
                                   " does not match weight count " +
                                   std::to_string(w.size()));
  std::vector<elem_t<B>> with_gen(a.begin(), a.end());
  with_gen.push_back(ideal.generator());
  if (!ideal.ring().is_unit(gcd_all<B>(ideal.ring(), with_gen)))
    fail(Errc::not_unital, "tuple is not unital modulo the ideal");
}

} // namespace detail

/// a ~ b in PF^{k,w}_I. Tuples need only be unital modulo I. Always true
/// over the unit ideal.
template <EuclideanDomain B>
bool proj_equiv(std::span<const elem_t<B>> a, std::span<const elem_t<B>> b,
                const Ideal<B> &ideal, const WeightVector &w) {
  detail::check_tuple(ideal, a, w);
  detail::check_tuple(ideal, b, w);
  if (ideal.is_unit()) return true;
  WeightedAction<B> action(QuotientRing<B>(ideal), w);
  return action.related(a, b);
}

template <EuclideanDomain B>
ProjPoint<B> make_point(const Ideal<B> &ideal, const WeightVector &w,
                        std::vector<elem_t<B>> rep) {
  if (ideal.is_unit()) return {ideal, w, {}, true};
  detail::check_tuple<B>(ideal, rep, w);
  if (!is_unital_tuple<B>(ideal.ring(), rep)) {
    QuotientRing<B> q(ideal);
    for (auto &x : rep) x = q.reduce(x);
    rep = lift_unital_residue<B>(q, rep);
  }
  return {ideal, w, std::move(rep), false};
}

/// Canonical member of the class of p: the lexicographically smallest
/// residue tuple of its orbit, lifted to a unital tuple of the base ring.
template <EuclideanDomain B> ProjPoint<B> canon(const ProjPoint<B> &p) {
  if (p.ideal.is_unit() || p.singleton) return {p.ideal, p.weights, {}, true};
  detail::check_tuple<B>(p.ideal, p.rep, p.weights);
  QuotientRing<B> q(p.ideal);
  WeightedAction<B> action(q, p.weights);
  auto least = action.orbit_min(p.rep);
  return {p.ideal, p.weights, lift_unital_residue<B>(q, least), false};
}

/// One canonical point per class of PF^{k,w}_I (k+1 = w.size()), sorted by
/// residue tuple. Residue tuples considered are those unital modulo I,
/// which are exactly the reductions of unital tuples of the base ring.
template <EuclideanDomain B>
std::vector<ProjPoint<B>> enumerate_pf(const Ideal<B> &ideal, const WeightVector &w,
                                       std::uint64_t guard = 1'000'000) {
  using V = elem_t<B>;
  if (!ideal.is_proper())
    fail(Errc::invalid_argument, "enumeration needs a proper ideal");
  QuotientRing<B> q(ideal);
  q.require_finite();
  const B &r = q.base();
  const std::uint64_t s = q.size();
  const std::size_t len = w.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (total > guard / s)
      fail(Errc::guard_exceeded, "projective enumeration exceeds guard " +
                                     std::to_string(guard));
    total *= s;
  }

  WeightedAction<B> action(q, w);
  std::vector<std::vector<V>> mins;
  std::vector<std::uint64_t> digits(len, 0);
  std::vector<V> tuple(len);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    for (std::size_t i = 0; i < len; ++i) tuple[i] = q.element(digits[i]);
    std::vector<V> with_mod = tuple;
    with_mod.push_back(q.modulus());
    if (r.is_unit(gcd_all<B>(r, with_mod)) && action.orbit_min(tuple) == tuple)
      mins.push_back(tuple);
    for (std::size_t i = len; i-- > 0;) {
      if (++digits[i] < s) break;
      digits[i] = 0;
    }
  }
  std::vector<ProjPoint<B>> out;
  out.reserve(mins.size());
  for (const auto &m : mins)
    out.push_back({ideal, w, lift_unital_residue<B>(q, m), false});
  return out;
}

} // namespace conglift
