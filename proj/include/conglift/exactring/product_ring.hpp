#pragma once

#include "conglift/error.hpp"
#include "conglift/exactring/concepts.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace conglift {

/// Finite direct product of rings of one type, componentwise arithmetic.
/// Used to exercise the finite-product examples of the unital set condition.
template <FiniteRing C> class ProductRing {
public:
  using value_type = std::vector<elem_t<C>>;

  explicit ProductRing(std::vector<C> factors) : factors_(std::move(factors)) {
    if (factors_.empty())
      fail(Errc::invalid_argument, "product ring needs at least one factor");
  }

  const std::vector<C> &factors() const { return factors_; }

  value_type zero() const {
    return build([](const C &c, std::size_t) { return c.zero(); });
  }
  value_type one() const {
    return build([](const C &c, std::size_t) { return c.one(); });
  }
  value_type from_int(std::int64_t n) const {
    return build([n](const C &c, std::size_t) { return c.from_int(n); });
  }
  value_type add(const value_type &a, const value_type &b) const {
    return build([&](const C &c, std::size_t i) { return c.add(a[i], b[i]); });
  }
  value_type sub(const value_type &a, const value_type &b) const {
    return build([&](const C &c, std::size_t i) { return c.sub(a[i], b[i]); });
  }
  value_type mul(const value_type &a, const value_type &b) const {
    return build([&](const C &c, std::size_t i) { return c.mul(a[i], b[i]); });
  }
  value_type neg(const value_type &a) const {
    return build([&](const C &c, std::size_t i) { return c.neg(a[i]); });
  }
  bool is_zero(const value_type &a) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i].is_zero(a[i])) return false;
    return true;
  }
  bool is_unit(const value_type &a) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i].is_unit(a[i])) return false;
    return true;
  }
  std::optional<value_type> inverse(const value_type &a) const {
    value_type out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      auto inv = factors_[i].inverse(a[i]);
      if (!inv) return std::nullopt;
      out.push_back(std::move(*inv));
    }
    return out;
  }
  bool less(const value_type &a, const value_type &b) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i].less(a[i], b[i])) return true;
      if (factors_[i].less(b[i], a[i])) return false;
    }
    return false;
  }
  std::string to_string(const value_type &a) const {
    std::string out = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += ", ";
      out += factors_[i].to_string(a[i]);
    }
    return out + ")";
  }

  std::uint64_t size() const {
    std::uint64_t n = 1;
    for (const auto &f : factors_) {
      const auto s = f.size();
      if (s != 0 && n > std::numeric_limits<std::uint64_t>::max() / s)
        fail(Errc::guard_exceeded, "product ring too large to enumerate");
      n *= s;
    }
    return n;
  }
  // mixed radix, first factor most significant so that index order is the
  // lexicographic order
  value_type element(std::uint64_t i) const {
    value_type out(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
      const auto s = factors_[k].size();
      out[k] = factors_[k].element(i % s);
      i /= s;
    }
    return out;
  }
  std::uint64_t index(const value_type &a) const {
    std::uint64_t i = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k)
      i = i * factors_[k].size() + factors_[k].index(a[k]);
    return i;
  }

  friend bool operator==(const ProductRing &a, const ProductRing &b) {
    return a.factors_ == b.factors_;
  }

private:
  template <class F> value_type build(F &&f) const {
    value_type out;
    out.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
      out.push_back(f(factors_[i], i));
    return out;
  }

  std::vector<C> factors_;
};

} // namespace conglift
