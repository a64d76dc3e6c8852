#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace f1 {

/// Input outside an operation's domain (bad index, modulus mismatch, non-flag, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured enumeration bound was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical check that must hold did not hold.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coset enumeration ran past its table cap. Not an error: the presented
/// group may be infinite or merely large; retry with a bigger cap.
struct Overflow {
  std::size_t limit = 0;
  std::size_t defined = 0;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

}  // namespace f1
