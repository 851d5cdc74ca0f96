#pragma once

#include "conglift/error.hpp"
#include "conglift/matgroup/matrix.hpp"
#include "conglift/matgroup/symplectic.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace conglift {

enum class GroupKind { SL, SP };

inline std::string_view to_string(GroupKind g) {
  return g == GroupKind::SL ? "sl" : "sp";
}

/// Matrix dimension of G_k: k+1 for SL, 2k for SP.
inline std::size_t group_dimension(GroupKind g, std::size_t k) {
  return g == GroupKind::SL ? k + 1 : 2 * k;
}

/// |R|^(n*n), failing if above the guard.
template <FiniteRing R>
std::uint64_t matrix_space_size(const R &r, std::size_t n, std::uint64_t guard) {
  const std::uint64_t s = r.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    if (s != 0 && total > guard / s)
      fail(Errc::guard_exceeded,
           "exhaustive enumeration of " + std::to_string(n) + "x" +
               std::to_string(n) + " matrices over a ring of size " +
               std::to_string(s) + " exceeds guard " + std::to_string(guard));
    total *= s;
  }
  return total;
}

/// Calls f on every n x n matrix over r, in index order.
template <FiniteRing R, class F>
void for_each_matrix(const R &r, std::size_t n, std::uint64_t guard, F &&f) {
  const std::uint64_t total = matrix_space_size(r, n, guard);
  const std::uint64_t s = r.size();
  std::vector<std::uint64_t> digits(n * n, 0);
  MatrixOf<R> m(n, n, r.zero());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = r.element(digits[k]);
    f(static_cast<const MatrixOf<R> &>(m));
    for (std::size_t k = n * n; k-- > 0;) {
      if (++digits[k] < s) break;
      digits[k] = 0;
    }
  }
}

/// All elements of G_k(r) by exhaustive filtering, in index order.
template <FiniteRing R>
std::vector<MatrixOf<R>> enumerate_group(const R &r, GroupKind g, std::size_t k,
                                         std::uint64_t guard) {
  std::vector<MatrixOf<R>> out;
  const std::size_t n = group_dimension(g, k);
  for_each_matrix(r, n, guard, [&](const MatrixOf<R> &m) {
    const bool member =
        g == GroupKind::SL ? det(r, m) == r.one() : is_symplectic(r, m);
    if (member) out.push_back(m);
  });
  return out;
}

} // namespace conglift
