#pragma once

#include "conglift/error.hpp"
#include "conglift/exactring/euclid.hpp"
#include "conglift/exactring/integer_ring.hpp"
#include "conglift/exactring/poly_ring.hpp"

#include <cstdint>
#include <tuple>
#include <variant>

namespace conglift {

enum class RingKind { Integers, PolyOverPrimeField };

/// Runtime tag for a supported base ring.
struct BaseRing {
  RingKind kind = RingKind::Integers;
  std::uint64_t characteristic = 0; // prime p for F_p[x], 0 for Z

  static BaseRing integers() { return {}; }
  static BaseRing poly(std::uint64_t p) {
    PolyRing check(p);
    return {RingKind::PolyOverPrimeField, p};
  }

  friend bool operator==(const BaseRing &, const BaseRing &) = default;
};

/// Element of a base ring whose ring is only known at run time (parsed input,
/// CLI). Typed code uses IntegerRing / PolyRing directly.
struct RingElem {
  BaseRing ring;
  std::variant<Int, Poly> value;

  static RingElem integer(Int v) { return {BaseRing::integers(), std::move(v)}; }
  static RingElem poly(std::uint64_t p, const std::vector<std::uint64_t> &c) {
    return {BaseRing::poly(p), PolyRing(p).make(c)};
  }

  friend bool operator==(const RingElem &, const RingElem &) = default;
};

/// egcd on run-time tagged elements; elements of different rings are
/// rejected.
inline std::tuple<RingElem, RingElem, RingElem> egcd(const RingElem &a,
                                                     const RingElem &b) {
  if (!(a.ring == b.ring))
    fail(Errc::mixed_ring, "egcd arguments live in different rings");
  if (a.ring.kind == RingKind::Integers) {
    auto r = egcd(IntegerRing{}, std::get<Int>(a.value), std::get<Int>(b.value));
    return {RingElem{a.ring, r.g}, RingElem{a.ring, r.x}, RingElem{a.ring, r.y}};
  }
  PolyRing ring(a.ring.characteristic);
  auto r = egcd(ring, std::get<Poly>(a.value), std::get<Poly>(b.value));
  return {RingElem{a.ring, r.g}, RingElem{a.ring, r.x}, RingElem{a.ring, r.y}};
}

} // namespace conglift
