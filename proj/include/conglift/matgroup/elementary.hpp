#pragma once

#include "conglift/error.hpp"
#include "conglift/matgroup/matrix.hpp"

#include <string>
#include <vector>

namespace conglift {

/// E_ij(t) = Id + t e_ij, i != j.
template <class T> struct ElemFactor {
  std::size_t i = 0, j = 0;
  T t{};
  friend bool operator==(const ElemFactor &, const ElemFactor &) = default;
};

/// Ordered product of elementary factors acting on size x size matrices.
/// The empty word is the identity.
template <class T> struct ElemWord {
  std::size_t size = 0;
  std::vector<ElemFactor<T>> factors;

  ElemWord() = default;
  explicit ElemWord(std::size_t n) : size(n) {}

  void push(std::size_t i, std::size_t j, T t) {
    if (i == j || i >= size || j >= size)
      fail(Errc::invalid_argument,
           "elementary factor indices (" + std::to_string(i) + ", " +
               std::to_string(j) + ") invalid for size " + std::to_string(size));
    factors.push_back({i, j, std::move(t)});
  }
  void append(const ElemWord &w) {
    for (const auto &f : w.factors) push(f.i, f.j, f.t);
  }
  bool empty() const { return factors.empty(); }

  friend bool operator==(const ElemWord &, const ElemWord &) = default;
};

template <Ring R> using WordOf = ElemWord<elem_t<R>>;

/// row_i += t * row_j, i.e. left multiplication by E_ij(t).
template <Ring R>
void apply_left(const R &r, MatrixOf<R> &m, std::size_t i, std::size_t j,
                const elem_t<R> &t) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    m(i, c) = r.add(m(i, c), r.mul(t, m(j, c)));
}

/// col_j += t * col_i, i.e. right multiplication by E_ij(t).
template <Ring R>
void apply_right(const R &r, MatrixOf<R> &m, std::size_t i, std::size_t j,
                 const elem_t<R> &t) {
  for (std::size_t row = 0; row < m.rows(); ++row)
    m(row, j) = r.add(m(row, j), r.mul(m(row, i), t));
}

template <Ring R>
MatrixOf<R> elementary(const R &r, std::size_t n, std::size_t i, std::size_t j,
                       const elem_t<R> &t) {
  auto m = identity(r, n);
  m(i, j) = r.add(m(i, j), t);
  return m;
}

/// Left-to-right product of the factors.
template <Ring R> MatrixOf<R> word_to_matrix(const R &r, const WordOf<R> &w) {
  auto m = identity(r, w.size);
  for (const auto &f : w.factors) apply_right(r, m, f.i, f.j, f.t);
  return m;
}

template <Ring R> WordOf<R> invert_word(const R &r, const WordOf<R> &w) {
  WordOf<R> out(w.size);
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
    out.push(it->i, it->j, r.neg(it->t));
  return out;
}

/// E_ab(-1) E_ba(1) E_ab(-1): the matrix [[0,-1],[1,0]] on rows/columns
/// (a, b) of an n x n identity.
template <Ring R>
WordOf<R> transposition_word(const R &r, std::size_t n = 2, std::size_t a = 0,
                             std::size_t b = 1) {
  WordOf<R> w(n);
  const auto minus_one = r.neg(r.one());
  w.push(a, b, minus_one);
  w.push(b, a, r.one());
  w.push(a, b, minus_one);
  return w;
}

/// E_ba(s^-1) E_ab(1-s) E_ba(-1) E_ab(1-s^-1) = diag(s, s^-1) on (a, b).
template <Ring R>
WordOf<R> diag_word(const R &r, const elem_t<R> &s, std::size_t n = 2,
                    std::size_t a = 0, std::size_t b = 1) {
  const auto inv = r.inverse(s);
  if (!inv) fail(Errc::not_unit, r.to_string(s) + " is not a unit");
  WordOf<R> w(n);
  w.push(b, a, *inv);
  w.push(a, b, r.sub(r.one(), s));
  w.push(b, a, r.neg(r.one()));
  w.push(a, b, r.sub(r.one(), *inv));
  return w;
}

/// Reinterprets a word over the base ring in a quotient.
template <EuclideanDomain B>
ElemWord<elem_t<B>> reduce(const QuotientRing<B> &q, const ElemWord<elem_t<B>> &w) {
  ElemWord<elem_t<B>> out(w.size);
  for (const auto &f : w.factors) {
    auto t = q.reduce(f.t);
    if (!q.is_zero(t)) out.push(f.i, f.j, std::move(t));
  }
  return out;
}

} // namespace conglift
