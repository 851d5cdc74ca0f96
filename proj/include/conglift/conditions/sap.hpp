#pragma once

#include "conglift/error.hpp"
#include "conglift/lifting/sap_lift.hpp"
#include "conglift/matgroup/enumerate.hpp"

#include <cstdint>

namespace conglift {

struct SapReport {
  GroupKind group = GroupKind::SL;
  std::size_t k = 0;
  Int modulus;
  std::uint64_t group_order = 0; // |G_k(Z/n)| by enumeration
  std::uint64_t lifted = 0;      // elements with a verified integral preimage
  bool verdict() const { return lifted == group_order; }
};

/// Lifts g to G_k(Z) and checks the lift exactly: determinant one (or form
/// preserved) over Z and reduction back to g.
inline bool lift_round_trip(GroupKind group, const IntMod &q, const Matrix<Int> &g) {
  const IntegerRing z;
  const auto b = group == GroupKind::SL ? sap_lift_sl(q, g) : sap_lift_sp(q, g);
  const bool member = group == GroupKind::SL ? det(z, b) == 1 : is_symplectic(z, b);
  return member && reduce(q, b) == g;
}

/// Strong approximation at level n, checked exhaustively: every element of
/// G_k(Z/n) is lifted and verified.
inline SapReport sap_check_small(GroupKind group, std::size_t k, const Int &n,
                                 std::uint64_t guard = 5'000'000) {
  if (n < 2) fail(Errc::invalid_argument, "modulus must be at least 2");
  if (k == 0) fail(Errc::invalid_argument, "rank k must be at least 1");
  const IntMod q(IntegerRing{}, n);
  SapReport report{group, k, n, 0, 0};
  const auto elements = enumerate_group(q, group, k, guard);
  report.group_order = elements.size();
  for (const auto &g : elements)
    if (lift_round_trip(group, q, g)) ++report.lifted;
  return report;
}

} // namespace conglift
