#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace conglift {

/// A commutative ring with unity, given as a ring object that owns the
/// arithmetic. Elements are plain values (`value_type`) kept canonical by the
/// ring, so `==` on values is ring equality.
template <class R>
concept Ring = std::copy_constructible<R> &&
    requires(const R &r, const typename R::value_type &a,
             const typename R::value_type &b, std::int64_t n) {
  typename R::value_type;
  { r.zero() } -> std::same_as<typename R::value_type>;
  { r.one() } -> std::same_as<typename R::value_type>;
  { r.from_int(n) } -> std::same_as<typename R::value_type>;
  { r.add(a, b) } -> std::same_as<typename R::value_type>;
  { r.sub(a, b) } -> std::same_as<typename R::value_type>;
  { r.mul(a, b) } -> std::same_as<typename R::value_type>;
  { r.neg(a) } -> std::same_as<typename R::value_type>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.is_unit(a) } -> std::convertible_to<bool>;
  { r.inverse(a) } -> std::same_as<std::optional<typename R::value_type>>;
  { r.less(a, b) } -> std::convertible_to<bool>;
  { r.to_string(a) } -> std::convertible_to<std::string>;
};

/// Euclidean domain with a canonical associate in every class of associates.
/// `divmod` returns (q, r) with a = q*b + r and r smaller than b in the
/// Euclidean norm; `canonical` returns (c, u) with c = a*u and u a unit.
template <class R>
concept EuclideanDomain = Ring<R> &&
    requires(const R &r, const typename R::value_type &a,
             const typename R::value_type &b) {
  { r.divmod(a, b) } -> std::same_as<std::pair<typename R::value_type,
                                               typename R::value_type>>;
  { r.norm_less(a, b) } -> std::convertible_to<bool>;
  { r.canonical(a) } -> std::same_as<std::pair<typename R::value_type,
                                               typename R::value_type>>;
};

/// A ring whose elements can be enumerated by index in canonical order.
template <class R>
concept FiniteRing = Ring<R> &&
    requires(const R &r, const typename R::value_type &a, std::uint64_t i) {
  { r.size() } -> std::same_as<std::uint64_t>;
  { r.element(i) } -> std::same_as<typename R::value_type>;
  { r.index(a) } -> std::same_as<std::uint64_t>;
};

template <Ring R> using elem_t = typename R::value_type;

template <Ring R>
bool is_one(const R &r, const elem_t<R> &a) { return a == r.one(); }

} // namespace conglift
