#pragma once

#include "conglift/error.hpp"
#include "conglift/exactring/concepts.hpp"
#include "conglift/exactring/quotient_ring.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace conglift {

/// Dense row-major matrix of ring values. The ring itself is passed to every
/// arithmetic routine; entries are expected to be canonical in it.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T &fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols)
      fail(Errc::shape_mismatch, "matrix data does not match its shape");
  }
  static Matrix from_rows(const std::vector<std::vector<T>> &rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    std::vector<T> data;
    data.reserve(rows.size() * c);
    for (const auto &r : rows) {
      if (r.size() != c) fail(Errc::shape_mismatch, "ragged matrix rows");
      data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(rows.size(), c, std::move(data));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  const std::vector<T> &data() const { return data_; }

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <Ring R> using MatrixOf = Matrix<elem_t<R>>;

template <Ring R> MatrixOf<R> identity(const R &r, std::size_t n) {
  MatrixOf<R> m(n, n, r.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = r.one();
  return m;
}

template <Ring R>
MatrixOf<R> multiply(const R &r, const MatrixOf<R> &a, const MatrixOf<R> &b) {
  if (a.cols() != b.rows())
    fail(Errc::shape_mismatch, "matrix product shapes do not agree");
  MatrixOf<R> out(a.rows(), b.cols(), r.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (r.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = r.add(out(i, j), r.mul(a(i, k), b(k, j)));
    }
  return out;
}

template <class T> Matrix<T> transpose(const Matrix<T> &a) {
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

template <Ring R> MatrixOf<R> negate(const R &r, const MatrixOf<R> &a) {
  MatrixOf<R> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = r.neg(a(i, j));
  return out;
}

/// Entrywise reduction of a base-ring matrix into a quotient.
template <EuclideanDomain B>
Matrix<elem_t<B>> reduce(const QuotientRing<B> &q, const Matrix<elem_t<B>> &a) {
  Matrix<elem_t<B>> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = q.reduce(a(i, j));
  return out;
}

template <Ring R> bool is_identity(const R &r, const MatrixOf<R> &a) {
  return a.is_square() && a == identity(r, a.rows());
}

namespace detail {

template <Ring R>
elem_t<R> det_cofactor(const R &r, const MatrixOf<R> &m,
                       std::vector<std::size_t> &cols, std::size_t row) {
  const std::size_t n = m.rows();
  if (row == n) return r.one();
  elem_t<R> acc = r.zero();
  bool negative = false;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (!r.is_zero(m(row, c))) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      elem_t<R> minor = det_cofactor(r, m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      elem_t<R> term = r.mul(m(row, c), minor);
      acc = negative ? r.sub(acc, term) : r.add(acc, term);
    }
    negative = !negative;
  }
  return acc;
}

// Fraction-free (Bareiss) elimination; exact division in a domain.
template <EuclideanDomain R>
elem_t<R> det_bareiss(const R &r, MatrixOf<R> m) {
  const std::size_t n = m.rows();
  elem_t<R> prev = r.one();
  bool negative = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (r.is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && r.is_zero(m(p, k))) ++p;
      if (p == n) return r.zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negative = !negative;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = r.sub(r.mul(m(i, j), m(k, k)), r.mul(m(i, k), m(k, j)));
        m(i, j) = r.divmod(num, prev).first;
      }
    prev = m(k, k);
  }
  return negative ? r.neg(m(n - 1, n - 1)) : m(n - 1, n - 1);
}

} // namespace detail

/// Exact determinant: cofactor expansion up to 4x4, fraction-free
/// elimination above over domains. Over a quotient ring the determinant is
/// taken on representatives in the base ring and reduced.
template <Ring R> elem_t<R> det(const R &r, const MatrixOf<R> &m) {
  if (!m.is_square()) fail(Errc::shape_mismatch, "determinant of non-square matrix");
  if (m.rows() == 0) return r.one();
  if constexpr (is_quotient_ring_v<R>) {
    return r.reduce(det(r.base(), m));
  } else if constexpr (EuclideanDomain<R>) {
    if (m.rows() > 4) return detail::det_bareiss(r, m);
  }
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return detail::det_cofactor(r, m, cols, 0);
}

template <Ring R> bool is_special_linear(const R &r, const MatrixOf<R> &m) {
  return m.is_square() && det(r, m) == r.one();
}

} // namespace conglift
