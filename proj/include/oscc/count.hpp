#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace oscc {

/// A non-negative integer or "unbounded". Used for oscillation counts and for
/// the length of a unary tape (the undamped oscillator has an unbounded one).
class Count {
 public:
  static constexpr Count finite(std::uint64_t n) { return Count(n, false); }
  static constexpr Count unbounded() { return Count(0, true); }

  constexpr bool is_finite() const { return !unbounded_; }
  constexpr bool is_unbounded() const { return unbounded_; }

  // Precondition: is_finite().
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr bool operator==(const Count&, const Count&) = default;

  std::string to_string() const {
    return unbounded_ ? std::string("unbounded") : std::to_string(value_);
  }

 private:
  constexpr Count(std::uint64_t v, bool u) : value_(v), unbounded_(u) {}

  std::uint64_t value_;
  bool unbounded_;
};

inline std::ostream& operator<<(std::ostream& os, const Count& c) {
  return os << c.to_string();
}

}  // namespace oscc
