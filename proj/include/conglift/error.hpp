#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conglift {

enum class Errc {
  invalid_argument,
  mixed_ring,
  not_comaximal,
  not_unital,
  not_unit,
  infinite_ring,
  guard_exceeded,
  not_special_linear,
  not_symplectic,
  shape_mismatch,
  unsupported_ring,
  usc_hypothesis,
  parse_error,
};

constexpr std::string_view to_string(Errc e) noexcept {
  switch (e) {
  case Errc::invalid_argument: return "invalid_argument";
  case Errc::mixed_ring: return "mixed_ring";
  case Errc::not_comaximal: return "not_comaximal";
  case Errc::not_unital: return "not_unital";
  case Errc::not_unit: return "not_unit";
  case Errc::infinite_ring: return "infinite_ring";
  case Errc::guard_exceeded: return "guard_exceeded";
  case Errc::not_special_linear: return "not_special_linear";
  case Errc::not_symplectic: return "not_symplectic";
  case Errc::shape_mismatch: return "shape_mismatch";
  case Errc::unsupported_ring: return "unsupported_ring";
  case Errc::usc_hypothesis: return "usc_hypothesis";
  case Errc::parse_error: return "parse_error";
  }
  return "unknown";
}

/// Contract violation raised by every module. The code is stable and is what
/// the CLI reports; the message is for humans.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string &what) {
  throw Error(code, what);
}

} // namespace conglift
