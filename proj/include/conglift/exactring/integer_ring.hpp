#pragma once

#include "conglift/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conglift {

using Int = boost::multiprecision::cpp_int;

/// The integers with arbitrary precision. Canonical associates are the
/// non-negative integers.
struct IntegerRing {
  using value_type = Int;

  Int zero() const { return Int(0); }
  Int one() const { return Int(1); }
  Int from_int(std::int64_t n) const { return Int(n); }

  Int add(const Int &a, const Int &b) const { return a + b; }
  Int sub(const Int &a, const Int &b) const { return a - b; }
  Int mul(const Int &a, const Int &b) const { return a * b; }
  Int neg(const Int &a) const { return -a; }

  bool is_zero(const Int &a) const { return a.is_zero(); }
  bool is_unit(const Int &a) const { return a == 1 || a == -1; }
  std::optional<Int> inverse(const Int &a) const {
    if (is_unit(a)) return a;
    return std::nullopt;
  }

  // remainder in [0, |b|)
  std::pair<Int, Int> divmod(const Int &a, const Int &b) const {
    if (b.is_zero()) fail(Errc::invalid_argument, "division by zero");
    Int q = a / b;
    Int r = a - q * b;
    if (r < 0) {
      if (b > 0) {
        r += b;
        q -= 1;
      } else {
        r -= b;
        q += 1;
      }
    }
    return {std::move(q), std::move(r)};
  }
  bool norm_less(const Int &a, const Int &b) const {
    return abs(a) < abs(b);
  }
  std::pair<Int, Int> canonical(const Int &a) const {
    if (a < 0) return {-a, Int(-1)};
    return {a, Int(1)};
  }

  bool less(const Int &a, const Int &b) const { return a < b; }
  std::string to_string(const Int &a) const { return a.str(); }

  friend bool operator==(const IntegerRing &, const IntegerRing &) {
    return true;
  }
};

/// Distinct positive prime divisors of |a| in ascending order, by trial
/// division. Desk-scale only.
inline std::vector<Int> prime_factors(const IntegerRing &, const Int &a) {
  std::vector<Int> out;
  Int n = abs(a);
  if (n < 2) return out;
  for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

} // namespace conglift
