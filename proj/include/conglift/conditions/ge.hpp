#pragma once

#include "conglift/matgroup/closure.hpp"
#include "conglift/matgroup/enumerate.hpp"

#include <cstdint>

namespace conglift {

struct GeReport {
  std::size_t n = 0;
  std::uint64_t closure_size = 0;
  std::uint64_t group_order = 0; // |SL_n| by det-1 enumeration
  bool overflow = false;
  bool verdict() const { return !overflow && closure_size == group_order; }
};

/// GE_n test for a finite ring: the elementary closure against the full
/// special linear group.
template <FiniteRing R>
GeReport ge_check(const R &r, std::size_t n, std::size_t cap = 1'000'000,
                  std::uint64_t guard = 5'000'000) {
  GeReport rep;
  rep.n = n;
  const auto closure = ge_closure(r, n, cap);
  rep.closure_size = closure.elements.size();
  rep.overflow = closure.overflow;
  rep.group_order = enumerate_group(r, GroupKind::SL, n - 1, guard).size();
  return rep;
}

} // namespace conglift
