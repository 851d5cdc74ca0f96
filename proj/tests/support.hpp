#pragma once

#include "conglift/conglift.hpp"
#include "oracles.hpp"

#include <cstdint>
#include <vector>

namespace testing_support {

using namespace conglift;

inline Matrix<Int> to_int_matrix(const oracle::Mat &m) {
  Matrix<Int> out(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) out(i, j) = m[i][j];
  return out;
}

inline oracle::Mat to_oracle(const Matrix<Int> &m) {
  oracle::Mat out(m.rows(), std::vector<oracle::i64>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i][j] = static_cast<oracle::i64>(m(i, j));
  return out;
}

/// Uniform element of SL_n(Z/q) by rejection on random matrices.
inline Matrix<Int> random_sl_mod(Sampler &rng, std::size_t n, std::int64_t q) {
  while (true) {
    oracle::Mat m(n, std::vector<oracle::i64>(n));
    for (auto &row : m)
      for (auto &v : row) v = static_cast<oracle::i64>(rng.below(q));
    if (oracle::md(oracle::det(m), q) == 1 % q) return to_int_matrix(m);
  }
}

/// Element of SL_n(Z) as a product of random elementary matrices.
inline Matrix<Int> random_sl_z(Sampler &rng, std::size_t n, int factors, std::int64_t bound) {
  const IntegerRing z;
  auto m = identity(z, n);
  for (int f = 0; f < factors; ++f) {
    const std::size_t i = rng.below(n);
    std::size_t j = rng.below(n - 1);
    if (j >= i) ++j;
    apply_right(z, m, i, j, Int(rng.between(-bound, bound)));
  }
  return m;
}

/// Random row with gcd 1 (rejection).
inline std::vector<Int> random_unimodular(Sampler &rng, std::size_t len, std::int64_t bound) {
  const IntegerRing z;
  while (true) {
    std::vector<Int> v(len);
    for (auto &x : v) x = rng.between(-bound, bound);
    if (gcd_all<IntegerRing>(z, v) == 1) return v;
  }
}

} // namespace testing_support
