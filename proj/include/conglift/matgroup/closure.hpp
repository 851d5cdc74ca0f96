#pragma once

#include "conglift/error.hpp"
#include "conglift/matgroup/elementary.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <unordered_set>
#include <vector>

namespace conglift {

template <class T> struct ClosureResult {
  std::vector<Matrix<T>> elements; // sorted by entry indices
  bool overflow = false;           // cap reached before the search finished
};

namespace detail {

struct IndexKeyHash {
  std::size_t operator()(const std::vector<std::uint64_t> &v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : v) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

template <FiniteRing R>
std::vector<std::uint64_t> index_key(const R &r, const MatrixOf<R> &m) {
  std::vector<std::uint64_t> key;
  key.reserve(m.data().size());
  for (const auto &a : m.data()) key.push_back(r.index(a));
  return key;
}

} // namespace detail

/// Subgroup of SL_n(q) generated by all E_ij(t), t in q, by breadth-first
/// search. It is all of SL_n(q) iff q is a GE_n ring. Stops with
/// `overflow` set once `cap` elements are found.
template <FiniteRing R>
ClosureResult<elem_t<R>> ge_closure(const R &r, std::size_t n, std::size_t cap) {
  using Key = std::vector<std::uint64_t>;
  std::unordered_set<Key, detail::IndexKeyHash> seen;
  std::vector<std::pair<Key, MatrixOf<R>>> found;
  std::deque<MatrixOf<R>> frontier;

  ClosureResult<elem_t<R>> result;
  auto visit = [&](MatrixOf<R> m) {
    auto key = detail::index_key(r, m);
    if (!seen.insert(key).second) return true;
    if (found.size() >= cap) {
      result.overflow = true;
      return false;
    }
    found.emplace_back(std::move(key), m);
    frontier.push_back(std::move(m));
    return true;
  };

  visit(identity(r, n));
  const std::uint64_t s = r.size();
  while (!frontier.empty() && !result.overflow) {
    MatrixOf<R> cur = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i < n && !result.overflow; ++i)
      for (std::size_t j = 0; j < n && !result.overflow; ++j) {
        if (i == j) continue;
        for (std::uint64_t ti = 1; ti < s; ++ti) {
          MatrixOf<R> next = cur;
          apply_right(r, next, i, j, r.element(ti));
          if (!visit(std::move(next))) break;
        }
      }
  }

  std::sort(found.begin(), found.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  for (auto &kv : found) result.elements.push_back(std::move(kv.second));
  return result;
}

} // namespace conglift
