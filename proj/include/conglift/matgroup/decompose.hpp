#pragma once

#include "conglift/error.hpp"
#include "conglift/exactring/euclid.hpp"
#include "conglift/matgroup/elementary.hpp"

#include <type_traits>
#include <vector>

namespace conglift {

namespace detail {

// Records row operations applied to a working copy of the input.
template <Ring R> struct RowReducer {
  const R &ring;
  MatrixOf<R> m;
  std::vector<ElemFactor<elem_t<R>>> ops;

  void add_row(std::size_t i, std::size_t j, const elem_t<R> &t) {
    if (ring.is_zero(t)) return;
    apply_left(ring, m, i, j, t);
    ops.push_back({i, j, t});
  }

  // First row at or below c holding a unit in column c.
  std::optional<std::size_t> unit_row(std::size_t c) const {
    for (std::size_t r = c; r < m.rows(); ++r)
      if (ring.is_unit(m(r, c))) return r;
    return std::nullopt;
  }

  // Moves the unit at (r, c) into (c, c) as the entry 1.
  void promote(std::size_t r, std::size_t c) {
    if (r == c) return;
    const auto inv = *ring.inverse(m(r, c));
    add_row(c, r, ring.mul(ring.sub(ring.one(), m(c, c)), inv));
  }
};

// Euclidean pivot search in a domain: reduce column c below the diagonal
// until a single nonzero entry remains, which is then a unit.
template <EuclideanDomain R> void euclid_pivot(RowReducer<R> &rr, std::size_t c) {
  const R &r = rr.ring;
  const std::size_t n = rr.m.rows();
  for (;;) {
    if (auto u = rr.unit_row(c)) {
      rr.promote(*u, c);
      return;
    }
    std::optional<std::size_t> piv;
    std::size_t nonzero = 0;
    for (std::size_t i = c; i < n; ++i) {
      if (r.is_zero(rr.m(i, c))) continue;
      ++nonzero;
      if (!piv || r.norm_less(rr.m(i, c), rr.m(*piv, c))) piv = i;
    }
    if (!piv || nonzero == 1)
      fail(Errc::not_special_linear, "column has no unit pivot");
    for (std::size_t i = c; i < n; ++i) {
      if (i == *piv || r.is_zero(rr.m(i, c))) continue;
      auto q = r.divmod(rr.m(i, c), rr.m(*piv, c)).first;
      rr.add_row(i, *piv, r.neg(q));
    }
  }
}

// Pivot creation in a finite quotient: if no entry of the column is a unit,
// the column is unital, so a combination of lower rows added to row c makes
// the diagonal entry a unit.
template <EuclideanDomain B>
void quotient_pivot(RowReducer<QuotientRing<B>> &rr, std::size_t c) {
  const auto &q = rr.ring;
  if (auto u = rr.unit_row(c)) {
    rr.promote(*u, c);
    return;
  }
  std::vector<elem_t<B>> tail;
  for (std::size_t i = c + 1; i < rr.m.rows(); ++i) tail.push_back(rr.m(i, c));
  std::vector<elem_t<B>> coeff;
  try {
    coeff = unit_combination<B>(q.base(), rr.m(c, c), tail, q.modulus());
  } catch (const Error &e) {
    if (e.code() == Errc::not_unital)
      fail(Errc::not_special_linear, "column has no unit pivot");
    throw;
  }
  for (std::size_t j = 0; j < coeff.size(); ++j)
    rr.add_row(c, c + 1 + j, q.reduce(coeff[j]));
  if (!q.is_unit(rr.m(c, c)))
    fail(Errc::not_special_linear, "pivot creation failed");
}

} // namespace detail

/// Writes M in SL_n(R) as a product of elementary matrices:
/// word_to_matrix(r, elementary_decompose(r, M)) == M.
///
/// Column by column a unit pivot is put on the diagonal (smallest row index
/// holding a unit; otherwise Euclidean reduction over a domain, or a unit
/// combination from lower rows over a finite quotient), the rest of the
/// column is cleared, and the remaining diagonal of units is written with
/// diag_word blocks. Supported rings: Euclidean domains and quotients of
/// them by nonzero ideals.
template <Ring R>
  requires(EuclideanDomain<R> || is_quotient_ring_v<R>)
WordOf<R> elementary_decompose(const R &r, const MatrixOf<R> &m) {
  if (!m.is_square()) fail(Errc::shape_mismatch, "decomposition of non-square matrix");
  if constexpr (is_quotient_ring_v<R>) {
    if (r.ideal().is_zero()) {
      // R/<0> is R
      return elementary_decompose(r.base(), m);
    }
  }
  if (!is_special_linear(r, m))
    fail(Errc::not_special_linear, "matrix does not have determinant 1");

  const std::size_t n = m.rows();
  detail::RowReducer<R> rr{r, m, {}};
  for (std::size_t c = 0; c < n; ++c) {
    if constexpr (is_quotient_ring_v<R>)
      detail::quotient_pivot(rr, c);
    else
      detail::euclid_pivot(rr, c);
    const auto inv = *r.inverse(rr.m(c, c));
    for (std::size_t i = c + 1; i < n; ++i)
      rr.add_row(i, c, r.neg(r.mul(rr.m(i, c), inv)));
  }
  for (std::size_t c = n; c-- > 1;) {
    const auto inv = *r.inverse(rr.m(c, c));
    for (std::size_t i = 0; i < c; ++i)
      rr.add_row(i, c, r.neg(r.mul(rr.m(i, c), inv)));
  }

  // rr.ops applied to m give D, so m = (inverse ops in order) * D
  WordOf<R> w(n);
  for (const auto &f : rr.ops) w.push(f.i, f.j, r.neg(f.t));
  auto acc = r.one();
  for (std::size_t c = 0; c + 1 < n; ++c) {
    acc = r.mul(acc, rr.m(c, c));
    if (acc == r.one()) continue;
    for (auto &f : diag_word(r, acc, n, c, c + 1).factors)
      if (!r.is_zero(f.t)) w.push(f.i, f.j, f.t);
  }
  return w;
}

} // namespace conglift
