#pragma once

#include "conglift/error.hpp"
#include "conglift/exactring/concepts.hpp"

#include <span>
#include <utility>
#include <vector>

namespace conglift {

template <class V> struct Bezout {
  V g, x, y;
};

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g and g the canonical
/// gcd. g is zero exactly when a = b = 0.
template <EuclideanDomain R>
Bezout<elem_t<R>> egcd(const R &r, const elem_t<R> &a, const elem_t<R> &b) {
  using V = elem_t<R>;
  V old_r = a, cur_r = b;
  V old_s = r.one(), cur_s = r.zero();
  V old_t = r.zero(), cur_t = r.one();
  while (!r.is_zero(cur_r)) {
    V q = r.divmod(old_r, cur_r).first;
    V next_r = r.sub(old_r, r.mul(q, cur_r));
    V next_s = r.sub(old_s, r.mul(q, cur_s));
    V next_t = r.sub(old_t, r.mul(q, cur_t));
    old_r = std::move(cur_r), cur_r = std::move(next_r);
    old_s = std::move(cur_s), cur_s = std::move(next_s);
    old_t = std::move(cur_t), cur_t = std::move(next_t);
  }
  if (r.is_zero(old_r)) return {r.zero(), r.zero(), r.zero()};
  auto [g, u] = r.canonical(old_r);
  return {std::move(g), r.mul(old_s, u), r.mul(old_t, u)};
}

template <EuclideanDomain R>
elem_t<R> gcd(const R &r, const elem_t<R> &a, const elem_t<R> &b) {
  return egcd(r, a, b).g;
}

/// Canonical gcd of all entries together with coefficients c such that
/// sum c_i a_i = g.
template <EuclideanDomain R>
std::pair<elem_t<R>, std::vector<elem_t<R>>>
bezout_vector(const R &r, std::span<const elem_t<R>> a) {
  using V = elem_t<R>;
  std::vector<V> c(a.size(), r.zero());
  V g = r.zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto b = egcd(r, g, a[i]);
    for (std::size_t j = 0; j < i; ++j) c[j] = r.mul(c[j], b.x);
    c[i] = b.y;
    g = std::move(b.g);
  }
  return {std::move(g), std::move(c)};
}

template <EuclideanDomain R>
elem_t<R> gcd_all(const R &r, std::span<const elem_t<R>> a) {
  elem_t<R> g = r.zero();
  for (const auto &v : a) g = gcd(r, g, v);
  return g;
}

template <EuclideanDomain R>
bool divides(const R &r, const elem_t<R> &d, const elem_t<R> &a) {
  if (r.is_zero(d)) return r.is_zero(a);
  return r.is_zero(r.divmod(a, d).second);
}

template <EuclideanDomain R>
elem_t<R> mod(const R &r, const elem_t<R> &a, const elem_t<R> &m) {
  if (r.is_zero(m)) return a;
  return r.divmod(a, m).second;
}

/// The x with x = a mod m and x = b mod n, reduced mod m*n. m and n must be
/// co-maximal and nonzero.
template <EuclideanDomain R>
elem_t<R> crt_pair(const R &r, const elem_t<R> &a, const elem_t<R> &m,
                   const elem_t<R> &b, const elem_t<R> &n) {
  auto bz = egcd(r, m, n);
  if (!r.is_unit(bz.g))
    fail(Errc::not_comaximal, "moduli " + r.to_string(m) + " and " +
                                  r.to_string(n) + " are not co-maximal");
  // m*x + n*y = 1
  auto x = r.add(r.mul(r.mul(a, bz.y), n), r.mul(r.mul(b, bz.x), m));
  return mod(r, x, r.mul(m, n));
}

/// Coefficients t (one per tail entry) such that head + sum t_j tail_j is a
/// unit modulo `modulus`. Requires (head, tail..., modulus) to generate the
/// unit ideal. Built prime by prime over the prime divisors of the modulus:
/// at a prime dividing the head, one tail entry not divisible by it gets
/// coefficient 1 and the rest 0; other primes are constrained (all
/// coefficients 0) only if the unconstrained choice would vanish there.
template <EuclideanDomain R>
std::vector<elem_t<R>> unit_combination(const R &r, const elem_t<R> &head,
                                        std::span<const elem_t<R>> tail,
                                        const elem_t<R> &modulus) {
  using V = elem_t<R>;
  {
    std::vector<V> all(tail.begin(), tail.end());
    all.push_back(head);
    all.push_back(modulus);
    if (!r.is_unit(gcd_all<R>(r, all)))
      fail(Errc::not_unital, "entries are not unital modulo " +
                                 r.to_string(modulus));
  }
  std::vector<V> t(tail.size(), r.zero());
  if (r.is_zero(modulus)) {
    // units of the base ring itself; only the trivial case is decidable here
    if (r.is_unit(head)) return t;
    fail(Errc::usc_hypothesis,
         "no unit combination modulo the zero ideal for " + r.to_string(head));
  }
  const auto primes = prime_factors(r, modulus);

  struct Constraint {
    V prime;
    std::size_t chosen; // tail index with coefficient 1, or npos for all-zero
  };
  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<Constraint> constraints;
  std::vector<V> free_primes;
  for (const auto &p : primes) {
    if (!divides(r, p, head)) {
      free_primes.push_back(p);
      continue;
    }
    std::size_t chosen = none;
    for (std::size_t j = 0; j < tail.size() && chosen == none; ++j)
      if (!divides(r, p, tail[j])) chosen = j;
    if (chosen == none)
      fail(Errc::not_unital, "no tail entry escapes the prime " +
                                 r.to_string(p));
    constraints.push_back({p, chosen});
  }

  auto solve = [&] {
    std::vector<V> coeff(tail.size(), r.zero());
    V modp = r.one();
    for (const auto &c : constraints) {
      for (std::size_t j = 0; j < tail.size(); ++j) {
        const V want = (j == c.chosen) ? r.one() : r.zero();
        coeff[j] = crt_pair(r, coeff[j], modp, want, c.prime);
      }
      modp = r.mul(modp, c.prime);
    }
    return coeff;
  };
  for (;;) {
    t = solve();
    V value = head;
    for (std::size_t j = 0; j < tail.size(); ++j)
      value = r.add(value, r.mul(t[j], tail[j]));
    bool changed = false;
    for (auto it = free_primes.begin(); it != free_primes.end();) {
      if (divides(r, *it, value)) {
        constraints.push_back({*it, none});
        it = free_primes.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
    if (!changed) return t;
  }
}

} // namespace conglift
