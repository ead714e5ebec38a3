#pragma once

#include <stdexcept>
#include <string>

namespace permpat {

// Error taxonomy shared by library and CLI. The CLI maps these to exit
// statuses: InvalidInputError -> 2, ResourceLimitError -> 3, IoError -> 1,
// CapacityError and anything else -> 4.

class InvalidInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fingerprint codes only cover pattern lengths up to 20; longer patterns
// must go through the byte-key fallback inside the census engine.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace permpat
