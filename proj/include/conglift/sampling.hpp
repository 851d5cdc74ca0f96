#pragma once

#include <cstdint>
#include <random>

namespace conglift {

/// Seeded source for reproducible sampling. Draws are reduced with a plain
/// modulus so sequences are identical across standard libraries.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

private:
  std::mt19937_64 engine_;
};

} // namespace conglift
