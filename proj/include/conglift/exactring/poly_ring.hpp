#pragma once

#include "conglift/error.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conglift {

/// Polynomial over F_p, coefficients lowest degree first. The zero polynomial
/// is the empty sequence; there are never trailing zero coefficients.
struct Poly {
  std::vector<std::uint64_t> coeffs;

  Poly() = default;
  explicit Poly(std::vector<std::uint64_t> c) : coeffs(std::move(c)) {}

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  std::uint64_t leading() const { return coeffs.empty() ? 0 : coeffs.back(); }

  friend bool operator==(const Poly &, const Poly &) = default;
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// F_p[x]. Canonical associates are the monic polynomials (and zero).
class PolyRing {
public:
  using value_type = Poly;

  explicit PolyRing(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 32))
      fail(Errc::unsupported_ring, "characteristic must be below 2^32");
    if (!is_prime_u64(p))
      fail(Errc::invalid_argument,
           "characteristic " + std::to_string(p) + " is not prime");
  }

  std::uint64_t characteristic() const { return p_; }

  Poly zero() const { return Poly{}; }
  Poly one() const { return Poly{{1}}; }
  Poly x() const { return Poly{{0, 1}}; }
  Poly from_int(std::int64_t n) const {
    auto m = static_cast<std::int64_t>(p_);
    auto r = n % m;
    if (r < 0) r += m;
    return constant(static_cast<std::uint64_t>(r));
  }
  Poly constant(std::uint64_t c) const {
    c %= p_;
    return c == 0 ? Poly{} : Poly{{c}};
  }
  /// Builds a polynomial from arbitrary coefficients, reducing mod p.
  Poly make(std::vector<std::uint64_t> c) const {
    for (auto &v : c) v %= p_;
    Poly out{std::move(c)};
    trim(out);
    return out;
  }

  Poly add(const Poly &a, const Poly &b) const {
    Poly out;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
      out.coeffs[i] = addc(at(a, i), at(b, i));
    trim(out);
    return out;
  }
  Poly sub(const Poly &a, const Poly &b) const { return add(a, neg(b)); }
  Poly neg(const Poly &a) const {
    Poly out = a;
    for (auto &c : out.coeffs) c = c == 0 ? 0 : p_ - c;
    return out;
  }
  Poly mul(const Poly &a, const Poly &b) const {
    if (a.is_zero() || b.is_zero()) return {};
    Poly out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs.size(); ++j)
        out.coeffs[i + j] =
            addc(out.coeffs[i + j], mulc(a.coeffs[i], b.coeffs[j]));
    trim(out);
    return out;
  }
  Poly scale(const Poly &a, std::uint64_t c) const {
    return mul(a, constant(c));
  }

  bool is_zero(const Poly &a) const { return a.is_zero(); }
  bool is_unit(const Poly &a) const { return a.degree() == 0; }
  std::optional<Poly> inverse(const Poly &a) const {
    if (!is_unit(a)) return std::nullopt;
    return constant(invc(a.coeffs[0]));
  }

  std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b) const {
    if (b.is_zero()) fail(Errc::invalid_argument, "division by zero polynomial");
    Poly r = a;
    if (a.degree() < b.degree()) return {Poly{}, r};
    Poly q;
    q.coeffs.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    const std::uint64_t lead_inv = invc(b.leading());
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
      const std::uint64_t c = mulc(r.leading(), lead_inv);
      q.coeffs[shift] = c;
      for (std::size_t j = 0; j < b.coeffs.size(); ++j)
        r.coeffs[shift + j] = subc(r.coeffs[shift + j], mulc(c, b.coeffs[j]));
      trim(r);
    }
    trim(q);
    return {std::move(q), std::move(r)};
  }
  bool norm_less(const Poly &a, const Poly &b) const {
    return a.degree() < b.degree();
  }
  std::pair<Poly, Poly> canonical(const Poly &a) const {
    if (a.is_zero()) return {a, one()};
    const Poly u = constant(invc(a.leading()));
    return {mul(a, u), u};
  }

  // Canonical order: by degree, then coefficients from the top down. This is
  // the order of the base-p index sum c_i p^i.
  bool less(const Poly &a, const Poly &b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs.size(); i-- > 0;)
      if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
    return false;
  }

  std::string to_string(const Poly &a) const {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = a.coeffs.size(); i-- > 0;) {
      const auto c = a.coeffs[i];
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      if (i == 0 || c != 1) out += std::to_string(c);
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

  std::uint64_t invc(std::uint64_t c) const {
    if (c % p_ == 0) fail(Errc::not_unit, "zero has no inverse mod p");
    return powc(c, p_ - 2);
  }
  std::uint64_t mulc(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p_);
  }

  friend bool operator==(const PolyRing &a, const PolyRing &b) {
    return a.p_ == b.p_;
  }

private:
  static std::uint64_t at(const Poly &a, std::size_t i) {
    return i < a.coeffs.size() ? a.coeffs[i] : 0;
  }
  static void trim(Poly &a) {
    while (!a.coeffs.empty() && a.coeffs.back() == 0) a.coeffs.pop_back();
  }
  std::uint64_t addc(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t subc(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t powc(std::uint64_t b, std::uint64_t e) const {
    std::uint64_t r = 1 % p_;
    b %= p_;
    while (e) {
      if (e & 1) r = mulc(r, b);
      b = mulc(b, b);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t p_;
};

/// Distinct monic irreducible factors of a, by trial division with monic
/// polynomials of increasing degree. Desk-scale only.
inline std::vector<Poly> prime_factors(const PolyRing &r, const Poly &a) {
  std::vector<Poly> out;
  if (a.degree() <= 0) return out;
  Poly rest = r.canonical(a).first;
  const std::uint64_t p = r.characteristic();
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    // all monic polynomials of degree d: p^d choices of lower coefficients
    std::vector<std::uint64_t> low(static_cast<std::size_t>(d), 0);
    for (;;) {
      std::vector<std::uint64_t> c = low;
      c.push_back(1);
      const Poly cand{std::move(c)};
      if (r.divmod(rest, cand).second.is_zero()) {
        out.push_back(cand);
        while (r.divmod(rest, cand).second.is_zero())
          rest = r.divmod(rest, cand).first;
      }
      std::size_t i = 0;
      while (i < low.size() && ++low[i] == p) low[i++] = 0;
      if (i == low.size()) break;
    }
  }
  if (rest.degree() >= 1) out.push_back(rest);
  std::sort(out.begin(), out.end(),
            [&](const Poly &x, const Poly &y) { return r.less(x, y); });
  return out;
}

} // namespace conglift
