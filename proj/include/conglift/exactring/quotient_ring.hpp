#pragma once

#include "conglift/error.hpp"
#include "conglift/exactring/concepts.hpp"
#include "conglift/exactring/euclid.hpp"
#include "conglift/exactring/integer_ring.hpp"
#include "conglift/exactring/poly_ring.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace conglift {

/// Principal ideal <g> of a Euclidean domain, generator kept canonical.
/// <0> is the zero ideal; a unit generator (canonically 1) is the unit ideal.
template <EuclideanDomain B> class Ideal {
public:
  using value_type = elem_t<B>;

  Ideal(B ring, const value_type &gen)
      : ring_(std::move(ring)), gen_(ring_.canonical(gen).first) {}

  const B &ring() const { return ring_; }
  const value_type &generator() const { return gen_; }
  bool is_zero() const { return ring_.is_zero(gen_); }
  bool is_unit() const { return ring_.is_unit(gen_); }
  bool is_proper() const { return !is_unit(); }
  bool contains(const value_type &a) const { return divides(ring_, gen_, a); }

  friend bool operator==(const Ideal &a, const Ideal &b) {
    return a.ring_ == b.ring_ && a.gen_ == b.gen_;
  }

private:
  B ring_;
  value_type gen_;
};

template <EuclideanDomain B>
Ideal<B> product(const Ideal<B> &a, const Ideal<B> &b) {
  return Ideal<B>(a.ring(), a.ring().mul(a.generator(), b.generator()));
}

/// I + J = R, i.e. the gcd of the generators is a unit.
template <EuclideanDomain B>
bool is_comaximal(const Ideal<B> &a, const Ideal<B> &b) {
  if (!(a.ring() == b.ring()))
    fail(Errc::mixed_ring, "ideals live in different rings");
  return a.ring().is_unit(gcd(a.ring(), a.generator(), b.generator()));
}

/// Quotient R/<g> of a Euclidean domain. Elements are canonical remainders:
/// 0 <= a < g over Z, deg a < deg g over F_p[x]. The unit ideal gives the
/// zero ring (one element, which is also a unit); <0> gives R itself.
template <EuclideanDomain B> class QuotientRing {
public:
  using value_type = elem_t<B>;
  using base_type = B;

  QuotientRing(B base, const value_type &modulus)
      : ideal_(std::move(base), modulus) {}
  explicit QuotientRing(Ideal<B> ideal) : ideal_(std::move(ideal)) {}

  const B &base() const { return ideal_.ring(); }
  const Ideal<B> &ideal() const { return ideal_; }
  const value_type &modulus() const { return ideal_.generator(); }
  bool is_zero_ring() const { return ideal_.is_unit(); }

  bool is_finite() const {
    if (is_zero_ring()) return true;
    if (ideal_.is_zero()) return false;
    return true;
  }

  value_type reduce(const value_type &a) const {
    if (ideal_.is_zero()) return a;
    if (is_zero_ring()) return base().zero();
    return base().divmod(a, modulus()).second;
  }

  value_type zero() const { return base().zero(); }
  value_type one() const { return reduce(base().one()); }
  value_type from_int(std::int64_t n) const {
    return reduce(base().from_int(n));
  }
  value_type add(const value_type &a, const value_type &b) const {
    return reduce(base().add(a, b));
  }
  value_type sub(const value_type &a, const value_type &b) const {
    return reduce(base().sub(a, b));
  }
  value_type mul(const value_type &a, const value_type &b) const {
    return reduce(base().mul(a, b));
  }
  value_type neg(const value_type &a) const { return reduce(base().neg(a)); }
  bool is_zero(const value_type &a) const { return base().is_zero(a); }

  bool is_unit(const value_type &a) const {
    if (is_zero_ring()) return true;
    if (ideal_.is_zero()) return base().is_unit(a);
    return base().is_unit(gcd(base(), a, modulus()));
  }
  std::optional<value_type> inverse(const value_type &a) const {
    if (is_zero_ring()) return zero();
    if (ideal_.is_zero()) return base().inverse(a);
    auto bz = egcd(base(), a, modulus());
    if (!base().is_unit(bz.g)) return std::nullopt;
    return reduce(base().mul(bz.x, *base().inverse(bz.g)));
  }
  value_type inverse_or_throw(const value_type &a) const {
    auto inv = inverse(a);
    if (!inv) fail(Errc::not_unit, to_string(a) + " is not a unit");
    return *inv;
  }

  bool less(const value_type &a, const value_type &b) const {
    return base().less(a, b);
  }
  std::string to_string(const value_type &a) const {
    return base().to_string(a);
  }

  /// Cardinality; throws for the infinite quotient by <0>.
  std::uint64_t size() const {
    require_finite();
    if (is_zero_ring()) return 1;
    if constexpr (std::is_same_v<B, IntegerRing>) {
      if (modulus() > Int(std::numeric_limits<std::uint64_t>::max()))
        fail(Errc::guard_exceeded, "quotient too large to enumerate");
      return static_cast<std::uint64_t>(modulus());
    } else {
      std::uint64_t n = 1;
      const std::uint64_t p = base().characteristic();
      for (int i = 0; i < modulus().degree(); ++i) {
        if (n > std::numeric_limits<std::uint64_t>::max() / p)
          fail(Errc::guard_exceeded, "quotient too large to enumerate");
        n *= p;
      }
      return n;
    }
  }

  /// i-th element in canonical ascending order.
  value_type element(std::uint64_t i) const {
    if constexpr (std::is_same_v<B, IntegerRing>) {
      return Int(i);
    } else {
      const std::uint64_t p = base().characteristic();
      std::vector<std::uint64_t> c;
      while (i) {
        c.push_back(i % p);
        i /= p;
      }
      return base().make(std::move(c));
    }
  }
  std::uint64_t index(const value_type &a) const {
    if constexpr (std::is_same_v<B, IntegerRing>) {
      return static_cast<std::uint64_t>(a);
    } else {
      std::uint64_t i = 0;
      for (std::size_t k = a.coeffs.size(); k-- > 0;)
        i = i * base().characteristic() + a.coeffs[k];
      return i;
    }
  }

  void require_finite() const {
    if (!is_finite())
      fail(Errc::infinite_ring, "quotient by the zero ideal is infinite");
  }

  friend bool operator==(const QuotientRing &a, const QuotientRing &b) {
    return a.ideal_ == b.ideal_;
  }

private:
  Ideal<B> ideal_;
};

template <class T> struct is_quotient_ring : std::false_type {};
template <class B> struct is_quotient_ring<QuotientRing<B>> : std::true_type {};
template <class T>
inline constexpr bool is_quotient_ring_v = is_quotient_ring<T>::value;

using IntMod = QuotientRing<IntegerRing>;
using PolyMod = QuotientRing<PolyRing>;

inline IntMod int_mod(const Int &n) { return IntMod(IntegerRing{}, n); }

/// Residue class with its parent quotient ring.
template <EuclideanDomain B> struct Residue {
  QuotientRing<B> parent;
  elem_t<B> rep;

  Residue(QuotientRing<B> q, const elem_t<B> &a)
      : parent(std::move(q)), rep(parent.reduce(a)) {}

  friend bool operator==(const Residue &, const Residue &) = default;
};

template <EuclideanDomain B> bool is_unit(const Residue<B> &r) {
  return r.parent.is_unit(r.rep);
}

/// Combines residues with pairwise co-maximal moduli into one residue modulo
/// the product ideal.
template <EuclideanDomain B>
Residue<B> crt_combine(std::span<const Residue<B>> residues) {
  if (residues.empty())
    fail(Errc::invalid_argument, "crt_combine needs at least one residue");
  const B &base = residues.front().parent.base();
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (!(residues[i].parent.base() == base))
      fail(Errc::mixed_ring, "residues live over different base rings");
    for (std::size_t j = i + 1; j < residues.size(); ++j)
      if (!is_comaximal(residues[i].parent.ideal(), residues[j].parent.ideal()))
        fail(Errc::not_comaximal,
             "moduli at positions " + std::to_string(i) + " and " +
                 std::to_string(j) + " (" +
                 base.to_string(residues[i].parent.modulus()) + ", " +
                 base.to_string(residues[j].parent.modulus()) +
                 ") are not co-maximal");
  }
  elem_t<B> value = residues.front().rep;
  elem_t<B> modulus = residues.front().parent.modulus();
  for (std::size_t i = 1; i < residues.size(); ++i) {
    const auto &m2 = residues[i].parent.modulus();
    if (base.is_zero(modulus) || base.is_zero(m2)) {
      // co-maximal with <0> forces the other side to be the unit ideal
      if (base.is_zero(m2)) value = residues[i].rep;
      modulus = base.mul(modulus, m2);
      continue;
    }
    value = crt_pair(base, value, modulus, residues[i].rep, m2);
    modulus = base.mul(modulus, m2);
  }
  return Residue<B>(QuotientRing<B>(base, modulus), value);
}

/// Units of a finite quotient in ascending canonical order.
template <EuclideanDomain B>
std::vector<elem_t<B>> unit_list(const QuotientRing<B> &q) {
  q.require_finite();
  std::vector<elem_t<B>> out;
  const std::uint64_t n = q.size();
  for (std::uint64_t i = 0; i < n; ++i) {
    auto a = q.element(i);
    if (q.is_unit(a)) out.push_back(std::move(a));
  }
  return out;
}

} // namespace conglift
