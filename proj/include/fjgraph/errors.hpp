#pragma once

#include <stdexcept>
#include <string>

namespace fj {

/// Thrown when a request would exceed a configured size cap (graph, matrix,
/// eigensolver or enumeration cap).
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Thrown when a computation contradicts a structural property that must hold
/// for every Full-Flag Johnson graph (connectivity, block regularity, ...).
/// Carries the offending witness in its message.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

inline void require_cap(long long value, long long cap, const char* what) {
  if (value > cap) {
    throw CapExceeded(std::string(what) + " " + std::to_string(value) +
                      " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace detail
}  // namespace fj
