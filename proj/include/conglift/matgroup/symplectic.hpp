#pragma once

#include "conglift/error.hpp"
#include "conglift/matgroup/matrix.hpp"

namespace conglift {

/// The alternating form [[0, Id_k], [-Id_k, 0]] on R^{2k}.
template <Ring R> MatrixOf<R> symplectic_form(const R &r, std::size_t k) {
  MatrixOf<R> omega(2 * k, 2 * k, r.zero());
  for (std::size_t i = 0; i < k; ++i) {
    omega(i, k + i) = r.one();
    omega(k + i, i) = r.neg(r.one());
  }
  return omega;
}

/// <x, y> = x^T Omega y for the standard form.
template <Ring R>
elem_t<R> symplectic_pairing(const R &r, std::span<const elem_t<R>> x,
                             std::span<const elem_t<R>> y) {
  const std::size_t k = x.size() / 2;
  elem_t<R> acc = r.zero();
  for (std::size_t i = 0; i < k; ++i) {
    acc = r.add(acc, r.mul(x[i], y[k + i]));
    acc = r.sub(acc, r.mul(x[k + i], y[i]));
  }
  return acc;
}

/// M^T Omega M == Omega exactly.
template <Ring R> bool is_symplectic(const R &r, const MatrixOf<R> &m) {
  if (!m.is_square()) fail(Errc::shape_mismatch, "symplectic test of non-square matrix");
  if (m.rows() % 2 != 0)
    fail(Errc::shape_mismatch, "symplectic test needs even dimension");
  const auto omega = symplectic_form(r, m.rows() / 2);
  return multiply(r, multiply(r, transpose(m), omega), m) == omega;
}

/// Inverse of a symplectic matrix: -Omega M^T Omega.
template <Ring R> MatrixOf<R> symplectic_inverse(const R &r, const MatrixOf<R> &m) {
  const auto omega = symplectic_form(r, m.rows() / 2);
  return negate(r, multiply(r, multiply(r, omega, transpose(m)), omega));
}

} // namespace conglift
