#pragma once

#include <stdexcept>
#include <string>

namespace qdw {

// Raised when an interval comparison against an irrational q stays
// undecidable at the configured precision cap.
class precision_exhausted : public std::runtime_error {
 public:
  explicit precision_exhausted(const std::string& what)
      : std::runtime_error(what) {}
};

// Raised when a lattice build would exceed the element cap.
class cap_exceeded : public std::runtime_error {
 public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qdw
