#pragma once

#include "conglift/error.hpp"
#include "conglift/exactring/euclid.hpp"
#include "conglift/exactring/integer_ring.hpp"
#include "conglift/exactring/poly_ring.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace conglift {

/// b = sum coefficients[j] * set[j+1], with set[0] + b a unit mod n.
struct UscWitness {
  Int b;
  std::vector<Int> coefficients;
};

/// Unital set condition for <n> in Z, decided constructively from the prime
/// divisors of n.
inline UscWitness usc_witness_z(std::span<const Int> set, const Int &n) {
  const IntegerRing z;
  if (set.size() < 2)
    fail(Errc::invalid_argument, "unital set condition needs at least two elements");
  if (n.is_zero() || z.is_unit(n))
    fail(Errc::invalid_argument, "modulus must satisfy |n| >= 2");
  if (!z.is_unit(gcd_all<IntegerRing>(z, set)))
    fail(Errc::not_unital, "set is not unital");
  const auto tail = set.subspan(1);
  UscWitness w;
  w.coefficients = unit_combination<IntegerRing>(z, set[0], tail, n);
  w.b = 0;
  for (std::size_t j = 0; j < tail.size(); ++j) w.b += w.coefficients[j] * tail[j];
  return w;
}

/// Refutation of the unital set condition for <0> in Z on one unital set:
/// b ranges over <g>, g = gcd of the tail, so head + b can be a unit (+-1)
/// only if head = 1 or head = -1 mod g.
struct ZeroIdealRefutation {
  std::vector<Int> set;
  Int tail_gcd;
  Int head_residue;              // head mod tail_gcd
  std::vector<Int> unit_residues; // 1 and -1 mod tail_gcd
  bool refuted = false;
};

inline ZeroIdealRefutation refute_zero_ideal_z(std::span<const Int> set) {
  const IntegerRing z;
  if (set.size() < 2)
    fail(Errc::invalid_argument, "unital set condition needs at least two elements");
  if (!z.is_unit(gcd_all<IntegerRing>(z, set)))
    fail(Errc::not_unital, "set is not unital");
  ZeroIdealRefutation r;
  r.set.assign(set.begin(), set.end());
  r.tail_gcd = gcd_all<IntegerRing>(z, set.subspan(1));
  r.head_residue = mod(z, set[0], r.tail_gcd);
  for (int u : {1, -1}) r.unit_residues.push_back(mod(z, Int(u), r.tail_gcd));
  r.refuted = true;
  for (const auto &u : r.unit_residues)
    if (u == r.head_residue) r.refuted = false;
  return r;
}

/// Outcome of an exhaustive unital set condition scan over a finite ring.
template <class V> struct UscReport {
  bool satisfied = true;
  std::vector<std::pair<std::vector<V>, V>> witnesses; // unital set -> b
  std::optional<std::vector<V>> counterexample;
  std::size_t max_set_size = 0;
  std::uint64_t sets_scanned = 0;
  std::uint64_t unital_sets = 0;
  std::uint64_t guard = 0;
};

namespace detail {

// Members of the ideal generated by gens, as an index bitmap.
template <FiniteRing S>
std::vector<char> ideal_bitmap(const S &s, std::span<const elem_t<S>> gens) {
  const std::uint64_t n = s.size();
  std::vector<char> in(n, 0);
  in[s.index(s.zero())] = 1;
  for (const auto &g : gens) {
    std::vector<std::uint64_t> members;
    for (std::uint64_t i = 0; i < n; ++i)
      if (in[i]) members.push_back(i);
    std::vector<elem_t<S>> multiples;
    for (std::uint64_t i = 0; i < n; ++i) multiples.push_back(s.mul(s.element(i), g));
    for (auto m : members) {
      const auto x = s.element(m);
      for (const auto &y : multiples) in[s.index(s.add(x, y))] = 1;
    }
  }
  return in;
}

} // namespace detail

/// Exhaustive check of the unital set condition for the ideal <gen> of the
/// finite ring s, over all ordered unital sets of sizes 2..max_size.
template <FiniteRing S>
UscReport<elem_t<S>> usc_check_finite(const S &s, const elem_t<S> &gen,
                                      std::size_t max_size,
                                      std::uint64_t guard = 1'000'000) {
  using V = elem_t<S>;
  if (max_size < 2) fail(Errc::invalid_argument, "set size bound must be at least 2");
  const std::uint64_t n = s.size();
  std::uint64_t total = 0;
  {
    std::uint64_t pw = n;
    for (std::size_t k = 2; k <= max_size; ++k) {
      if (pw > guard / n) fail(Errc::guard_exceeded, "unital set scan exceeds guard");
      pw *= n;
      total += pw;
      if (total > guard) fail(Errc::guard_exceeded, "unital set scan exceeds guard");
    }
  }
  UscReport<V> report;
  report.max_set_size = max_size;
  report.guard = guard;

  const std::vector<V> g1{gen};
  const auto ideal = detail::ideal_bitmap<S>(s, g1);
  // u is a unit modulo the ideal iff u*c - 1 lies in it for some c
  std::vector<char> unit_mod(n, 0);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t c = 0; c < n && !unit_mod[i]; ++c)
      if (ideal[s.index(s.sub(s.mul(s.element(i), s.element(c)), s.one()))])
        unit_mod[i] = 1;
  const auto one_idx = s.index(s.one());

  for (std::size_t k = 2; k <= max_size; ++k) {
    std::vector<std::uint64_t> digits(k, 0);
    for (;;) {
      ++report.sets_scanned;
      std::vector<V> set;
      for (auto d : digits) set.push_back(s.element(d));
      if (detail::ideal_bitmap<S>(s, set)[one_idx]) {
        ++report.unital_sets;
        const auto tail = detail::ideal_bitmap<S>(s, std::span<const V>(set).subspan(1));
        std::optional<V> b;
        for (std::uint64_t i = 0; i < n && !b; ++i)
          if (tail[i] && unit_mod[s.index(s.add(set[0], s.element(i)))])
            b = s.element(i);
        if (!b) {
          report.satisfied = false;
          report.counterexample = set;
          return report;
        }
        report.witnesses.emplace_back(std::move(set), std::move(*b));
      }
      std::size_t i = k;
      while (i-- > 0) {
        if (++digits[i] < n) break;
        digits[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
  return report;
}

/// Recomputes every stored witness: b in the ideal of the tail and head + b
/// a unit modulo <gen>.
template <FiniteRing S>
bool recheck(const S &s, const elem_t<S> &gen, const UscReport<elem_t<S>> &report) {
  using V = elem_t<S>;
  const std::vector<V> g1{gen};
  const auto ideal = detail::ideal_bitmap<S>(s, g1);
  for (const auto &[set, b] : report.witnesses) {
    const auto tail = detail::ideal_bitmap<S>(s, std::span<const V>(set).subspan(1));
    if (!tail[s.index(b)]) return false;
    const auto u = s.add(set[0], b);
    bool unit = false;
    for (std::uint64_t c = 0; c < s.size() && !unit; ++c)
      unit = ideal[s.index(s.sub(s.mul(u, s.element(c)), s.one()))];
    if (!unit) return false;
  }
  return true;
}

/// Exhaustive and symbolic refutation that x + t(3x^2 - 1) is a unit in
/// F_5[x] for any t: the units are the nonzero constants, and the sum has
/// degree deg t + 2 for t != 0 (3 * lc(t) != 0 mod 5) and degree 1 for t = 0.
struct PolyRefutation {
  int degree_bound = 0;
  std::uint64_t candidates = 0;
  std::uint64_t non_units = 0;
  int min_degree = 0;
  bool degree_formula_holds = true; // observed degrees match deg t + 2 / 1
  // symbolic part
  std::uint64_t prime = 5;
  std::uint64_t tail_leading = 3;
  std::vector<std::uint64_t> leading_products; // 3c mod 5, c = 1..4
  bool leading_products_nonzero = true;
  int zero_t_degree = 1;
  Poly bezout_x, bezout_tail; // x * bezout_x + (3x^2-1) * bezout_tail = 1
  bool refuted() const {
    return non_units == candidates && degree_formula_holds &&
           leading_products_nonzero && zero_t_degree >= 1;
  }
};

inline PolyRefutation usc_refute_poly_example(int degree_bound) {
  if (degree_bound < 0) fail(Errc::invalid_argument, "degree bound must be >= 0");
  const PolyRing f5(5);
  const Poly head = f5.x();
  const Poly tail = f5.make({5 - 1, 0, 3}); // 3x^2 - 1
  PolyRefutation r;
  r.degree_bound = degree_bound;
  r.min_degree = -1;

  std::vector<std::uint64_t> digits(static_cast<std::size_t>(degree_bound) + 1, 0);
  for (;;) {
    const Poly t = f5.make(digits);
    const Poly v = f5.add(head, f5.mul(t, tail));
    ++r.candidates;
    if (!f5.is_unit(v)) ++r.non_units;
    if (r.min_degree < 0 || v.degree() < r.min_degree) r.min_degree = v.degree();
    const int expected = t.is_zero() ? 1 : t.degree() + 2;
    if (v.degree() != expected) r.degree_formula_holds = false;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == 5) digits[i++] = 0;
    if (i == digits.size()) break;
  }

  for (std::uint64_t c = 1; c < r.prime; ++c) {
    const auto prod = (r.tail_leading * c) % r.prime;
    r.leading_products.push_back(prod);
    if (prod == 0) r.leading_products_nonzero = false;
  }
  r.zero_t_degree = head.degree();
  auto bz = egcd(f5, head, tail);
  if (!f5.is_unit(bz.g)) fail(Errc::not_unital, "{x, 3x^2-1} is not unital over F_5[x]");
  r.bezout_x = bz.x;
  r.bezout_tail = bz.y;
  return r;
}

} // namespace conglift
