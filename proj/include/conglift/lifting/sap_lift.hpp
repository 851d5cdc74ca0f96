#pragma once

#include "conglift/error.hpp"
#include "conglift/lifting/completion.hpp"
#include "conglift/lifting/residue_lift.hpp"
#include "conglift/matgroup/decompose.hpp"
#include "conglift/matgroup/symplectic.hpp"

#include <vector>

namespace conglift {

/// Inverse of a determinant-one matrix over a Euclidean domain, through its
/// elementary decomposition.
template <EuclideanDomain R>
MatrixOf<R> special_linear_inverse(const R &r, const MatrixOf<R> &m) {
  return word_to_matrix(r, invert_word(r, elementary_decompose(r, m)));
}

/// Preimage in SL_n(B) of A in SL_n(B/I): decompose A into elementary
/// factors over the quotient and multiply the factors out over B with
/// their canonical representatives.
template <EuclideanDomain B>
Matrix<elem_t<B>> sap_lift_sl(const QuotientRing<B> &q, const Matrix<elem_t<B>> &a) {
  if (!a.is_square()) fail(Errc::shape_mismatch, "lift of non-square matrix");
  if (q.is_zero_ring()) return identity(q.base(), a.rows());
  const auto word = elementary_decompose(q, reduce(q, a));
  return word_to_matrix(q.base(), word);
}

namespace detail {

// T with T e_0 = e_0, T e_k = e_k + h + c e_0 and T x = x - <x,h> e_0 on the
// span H of the other basis vectors (h in H). Symplectic for all h, c.
template <EuclideanDomain R>
MatrixOf<R> heisenberg_element(const R &r, std::size_t k,
                               const std::vector<elem_t<R>> &h,
                               const elem_t<R> &c) {
  auto t = identity(r, 2 * k);
  t(0, k) = c;
  for (std::size_t i = 0; i < 2 * k; ++i) {
    if (i == 0 || i == k) continue;
    t(i, k) = h[i];
    // <e_i, h>
    const elem_t<R> pair = i < k ? h[k + i] : r.neg(h[i - k]);
    t(0, i) = r.neg(pair);
  }
  return t;
}

} // namespace detail

/// Preimage in Sp_2k(B) of a symplectic A over B/I.
///
/// The first row of A is lifted to a unital row and completed to P in
/// Sp_2k(B); Y = (A P^-1)^T then fixes e_0. A Heisenberg element T with
/// integral parameters matches Y on e_k, so T^-1 Y is the identity on the
/// plane (e_0, e_k) and a symplectic block Z on its complement. Z is lifted
/// recursively and the pieces are multiplied back over B.
template <EuclideanDomain B>
Matrix<elem_t<B>> sap_lift_sp(const QuotientRing<B> &q, const Matrix<elem_t<B>> &a) {
  using V = elem_t<B>;
  const B &r = q.base();
  if (!a.is_square() || a.rows() % 2 != 0)
    fail(Errc::shape_mismatch, "symplectic lift needs an even square matrix");
  const std::size_t dim = a.rows(), k = dim / 2;
  if (q.is_zero_ring() || k == 0) return identity(r, dim);
  const auto am = reduce(q, a);
  if (!is_symplectic(q, am))
    fail(Errc::not_symplectic, "matrix does not preserve the symplectic form");

  const auto row0 = lift_unital_residue<B>(q, am.row(0));
  const auto p = complete_row_sp<B>(r, row0, 0);
  const auto a1 = multiply(q, am, reduce(q, symplectic_inverse(r, p)));
  const auto y = transpose(a1);

  std::vector<V> h(dim, r.zero());
  for (std::size_t i = 0; i < dim; ++i)
    if (i != 0 && i != k) h[i] = y(i, k);
  const auto t = detail::heisenberg_element(r, k, h, y(0, k));
  const auto y2 = multiply(q, reduce(q, symplectic_inverse(r, t)), y);

  // H indices in standard-form order: 1..k-1, k+1..2k-1
  std::vector<std::size_t> hidx;
  for (std::size_t i = 1; i < k; ++i) hidx.push_back(i);
  for (std::size_t i = k + 1; i < dim; ++i) hidx.push_back(i);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j : {std::size_t{0}, k}) {
      const V want = i == j ? q.one() : q.zero();
      if (y2(i, j) != want || y2(j, i) != want)
        fail(Errc::not_symplectic, "stabilizer reduction failed");
    }
  Matrix<V> z(hidx.size(), hidx.size());
  for (std::size_t i = 0; i < hidx.size(); ++i)
    for (std::size_t j = 0; j < hidx.size(); ++j) z(i, j) = y2(hidx[i], hidx[j]);

  const auto zhat = sap_lift_sp(q, z);
  auto yhat2 = identity(r, dim);
  for (std::size_t i = 0; i < hidx.size(); ++i)
    for (std::size_t j = 0; j < hidx.size(); ++j) yhat2(hidx[i], hidx[j]) = zhat(i, j);
  const auto yhat = multiply(r, t, yhat2);
  return multiply(r, transpose(yhat), p);
}

} // namespace conglift
