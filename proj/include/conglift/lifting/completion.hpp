#pragma once

#include "conglift/error.hpp"
#include "conglift/exactring/euclid.hpp"
#include "conglift/matgroup/elementary.hpp"
#include "conglift/matgroup/symplectic.hpp"

#include <span>
#include <utility>
#include <vector>

namespace conglift {

/// A determinant-one matrix whose row `pos` is `row` (which must be
/// unital): column operations C reduce the row to e_pos and the result is
/// C^-1. The standard basis row e_pos gives the identity.
template <EuclideanDomain R>
MatrixOf<R> complete_row_sl(const R &r, std::span<const elem_t<R>> row,
                            std::size_t pos) {
  const std::size_t n = row.size();
  if (n == 0 || pos >= n) fail(Errc::invalid_argument, "bad row or position");
  if (!r.is_unit(gcd_all<R>(r, row)))
    fail(Errc::not_unital, "row is not unital");

  std::vector<elem_t<R>> v(row.begin(), row.end());
  auto cinv = identity(r, n);
  // v <- v * E_ba(t) (col_a += t col_b) and C^-1 <- E_ba(-t) * C^-1
  auto col_op = [&](std::size_t a, std::size_t b, const elem_t<R> &t) {
    if (r.is_zero(t)) return;
    v[a] = r.add(v[a], r.mul(t, v[b]));
    apply_left(r, cinv, b, a, r.neg(t));
  };

  for (;;) {
    std::optional<std::size_t> piv;
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (r.is_zero(v[j])) continue;
      ++nonzero;
      if (!piv || r.norm_less(v[j], v[*piv])) piv = j;
    }
    if (nonzero <= 1) break;
    for (std::size_t j = 0; j < n; ++j)
      if (j != *piv && !r.is_zero(v[j]))
        col_op(j, *piv, r.neg(r.divmod(v[j], v[*piv]).first));
  }
  // single unit u left at some j; move it to position pos as 1
  std::size_t j = 0;
  while (r.is_zero(v[j])) ++j;
  const auto one = r.one();
  if (v[pos] != one) {
    if (n == 1) fail(Errc::not_special_linear, "1x1 row must be 1");
    if (j == pos) j = (pos + 1) % n; // v = u e_pos: pass the unit through column j
    if (r.is_zero(v[j])) col_op(j, pos, one);
    const auto uinv = *r.inverse(v[j]);
    col_op(pos, j, r.mul(r.sub(one, v[pos]), uinv));
  }
  for (std::size_t k = 0; k < n; ++k)
    if (k != pos) col_op(k, pos, r.neg(v[k]));
  // v C = e_pos, so row pos of C^-1 is the input row
  return cinv;
}

namespace detail {

// Integer row echelon form by unimodular row operations; returns the
// nonzero rows, a basis of the lattice spanned by the input rows.
template <EuclideanDomain R>
std::vector<std::vector<elem_t<R>>> lattice_basis(const R &r,
                                                  std::vector<std::vector<elem_t<R>>> rows) {
  if (rows.empty()) return rows;
  const std::size_t dim = rows.front().size();
  std::size_t top = 0;
  for (std::size_t c = 0; c < dim && top < rows.size(); ++c) {
    for (;;) {
      std::optional<std::size_t> piv;
      std::size_t nonzero = 0;
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (r.is_zero(rows[i][c])) continue;
        ++nonzero;
        if (!piv || r.norm_less(rows[i][c], rows[*piv][c])) piv = i;
      }
      if (!piv) break;
      if (nonzero == 1) {
        std::swap(rows[top], rows[*piv]);
        ++top;
        break;
      }
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (i == *piv || r.is_zero(rows[i][c])) continue;
        auto q = r.divmod(rows[i][c], rows[*piv][c]).first;
        for (std::size_t k = 0; k < dim; ++k)
          rows[i][k] = r.sub(rows[i][k], r.mul(q, rows[*piv][k]));
      }
    }
  }
  rows.resize(top);
  return rows;
}

} // namespace detail

/// Symplectic basis (f_1..f_k, g_1..g_k) of R^{2k} with f_1 = v, returned as
/// the columns of a matrix N with N^T Omega N = Omega. v must be unital.
///
/// Pairs are split off one at a time: for the current f, a partner g with
/// <f, g> = 1 comes from a Bezout combination of the current lattice basis,
/// and the orthogonal complement of span(f, g) is the image of
/// x -> x - <x,g> f + <x,f> g, reduced back to a basis.
template <EuclideanDomain R>
MatrixOf<R> symplectic_frame(const R &r, std::span<const elem_t<R>> v) {
  using V = elem_t<R>;
  const std::size_t dim = v.size();
  if (dim == 0 || dim % 2 != 0)
    fail(Errc::shape_mismatch, "symplectic row needs even positive length");
  if (!r.is_unit(gcd_all<R>(r, v))) fail(Errc::not_unital, "row is not unital");
  const std::size_t k = dim / 2;

  std::vector<std::vector<V>> lattice;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<V> e(dim, r.zero());
    e[i] = r.one();
    lattice.push_back(std::move(e));
  }

  std::vector<std::vector<V>> fs, gs;
  std::vector<V> f(v.begin(), v.end());
  for (std::size_t step = 0; step < k; ++step) {
    // partner g = sum y_j b_j with <f, g> = 1
    std::vector<V> pair;
    for (const auto &b : lattice) pair.push_back(symplectic_pairing<R>(r, f, b));
    auto [content, y] = bezout_vector<R>(r, pair);
    if (!r.is_unit(content))
      fail(Errc::not_symplectic, "form is degenerate on the complement");
    const auto cinv = *r.inverse(content);
    std::vector<V> g(dim, r.zero());
    for (std::size_t j = 0; j < lattice.size(); ++j)
      for (std::size_t c = 0; c < dim; ++c)
        g[c] = r.add(g[c], r.mul(r.mul(y[j], cinv), lattice[j][c]));

    std::vector<std::vector<V>> projected;
    for (const auto &b : lattice) {
      const V bg = symplectic_pairing<R>(r, b, g);
      const V bf = symplectic_pairing<R>(r, b, f);
      std::vector<V> p(dim);
      for (std::size_t c = 0; c < dim; ++c)
        p[c] = r.add(r.sub(b[c], r.mul(bg, f[c])), r.mul(bf, g[c]));
      projected.push_back(std::move(p));
    }
    fs.push_back(f);
    gs.push_back(std::move(g));
    lattice = detail::lattice_basis(r, std::move(projected));
    if (lattice.size() != dim - 2 * (step + 1))
      fail(Errc::not_symplectic, "complement has unexpected rank");
    if (!lattice.empty()) f = lattice.front();
  }

  MatrixOf<R> n(dim, dim, r.zero());
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t c = 0; c < dim; ++c) {
      n(c, j) = fs[j][c];
      n(c, k + j) = gs[j][c];
    }
  return n;
}

/// Symplectic permutation-like matrix Q with Q e_pos = e_0.
template <Ring R>
MatrixOf<R> symplectic_mover(const R &r, std::size_t k, std::size_t pos) {
  auto q = identity(r, 2 * k);
  if (pos == 0) return q;
  const std::size_t j = pos < k ? pos : pos - k;
  // rotation on the plane (j, k+j): e_{k+j} -> e_j, e_j -> -e_{k+j}
  auto rot = identity(r, 2 * k);
  if (pos >= k) {
    rot(j, j) = r.zero();
    rot(k + j, k + j) = r.zero();
    rot(j, k + j) = r.one();
    rot(k + j, j) = r.neg(r.one());
  }
  // swap of the planes (0, k) and (j, k+j)
  auto swap = identity(r, 2 * k);
  if (j != 0) {
    for (std::size_t a : {std::size_t{0}, j}) swap(a, a) = r.zero();
    for (std::size_t a : {k, k + j}) swap(a, a) = r.zero();
    swap(0, j) = swap(j, 0) = r.one();
    swap(k, k + j) = swap(k + j, k) = r.one();
  }
  return multiply(r, swap, rot);
}

/// A symplectic 2k x 2k matrix whose row `pos` is `row` (unital).
template <EuclideanDomain R>
MatrixOf<R> complete_row_sp(const R &r, std::span<const elem_t<R>> row,
                            std::size_t pos) {
  if (pos >= row.size()) fail(Errc::invalid_argument, "row position out of range");
  const std::size_t k = row.size() / 2;
  auto frame = symplectic_frame(r, row);     // frame e_0 = row
  auto n = multiply(r, frame, symplectic_mover(r, k, pos)); // n e_pos = row
  return transpose(n);
}

} // namespace conglift
