#pragma once

#include "conglift/error.hpp"
#include "conglift/exactring/euclid.hpp"
#include "conglift/exactring/quotient_ring.hpp"

#include <span>
#include <vector>

namespace conglift {

/// Lifts a row that is unital modulo q's ideal to a row that is unital in
/// the base ring, entrywise congruent to the input.
///
/// Entries 1.. are kept as canonical representatives (if they are all zero
/// the second entry is replaced by the modulus). Entry 0 is then shifted by
/// a multiple t of the modulus so that it is coprime to the gcd g of the
/// others: at each prime of g not dividing the modulus, t = 0 or 1 by CRT.
template <EuclideanDomain B>
std::vector<elem_t<B>> lift_unital_residue(const QuotientRing<B> &q,
                                           std::span<const elem_t<B>> row) {
  using V = elem_t<B>;
  const B &r = q.base();
  if (row.empty()) fail(Errc::invalid_argument, "empty row");
  std::vector<V> x;
  x.reserve(row.size());
  for (const auto &a : row) x.push_back(q.reduce(a));

  {
    std::vector<V> with_mod = x;
    with_mod.push_back(q.modulus());
    if (!r.is_unit(gcd_all<B>(r, with_mod)))
      fail(Errc::not_unital, "row is not unital modulo " + r.to_string(q.modulus()));
  }
  if (r.is_unit(gcd_all<B>(r, x))) return x;

  if (x.size() == 1) {
    // a single entry lifts only to a unit of the base ring
    if (q.is_zero_ring()) return {r.one()};
    for (const auto &cand : {r.one(), r.neg(r.one())})
      if (q.reduce(cand) == x[0]) return {cand};
    fail(Errc::not_unital, "single entry " + r.to_string(x[0]) +
                               " has no unit lift");
  }

  std::span<const V> rest(x.data() + 1, x.size() - 1);
  V g = gcd_all<B>(r, rest);
  if (r.is_zero(g)) {
    x[1] = q.modulus();
    g = r.canonical(q.modulus()).first;
  }
  V shift = r.zero(), shift_mod = r.one();
  for (const auto &p : prime_factors(r, g)) {
    if (divides(r, p, q.modulus())) continue; // then p does not divide x[0]
    const V want = divides(r, p, x[0]) ? r.one() : r.zero();
    shift = crt_pair(r, shift, shift_mod, want, p);
    shift_mod = r.mul(shift_mod, p);
  }
  x[0] = r.add(x[0], r.mul(shift, q.modulus()));
  if (!r.is_unit(gcd_all<B>(r, x)))
    fail(Errc::not_unital, "residue lift failed");
  return x;
}

} // namespace conglift
