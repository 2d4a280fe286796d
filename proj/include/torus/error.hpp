#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace torus {

/// Base class for every error raised by the library.
class TorusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModulusError : public TorusError {
 public:
  using TorusError::TorusError;
};

class ModulusMismatch : public TorusError {
 public:
  ModulusMismatch(int lhs, int rhs)
      : TorusError("modulus mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// A direction triple that is not a permutation of (0,1,2).
class IllFormedTriple : public TorusError {
 public:
  IllFormedTriple(std::uint32_t index, std::string detail)
      : TorusError("ill-formed direction triple at vertex index " + std::to_string(index) + ": " +
                   detail),
        vertex_index(index) {}
  std::uint32_t vertex_index;
};

/// A self-map that was expected to be a permutation has a collision.
class NotAPermutation : public TorusError {
 public:
  NotAPermutation(std::uint32_t first, std::uint32_t second, std::uint32_t image)
      : TorusError("not a permutation: " + std::to_string(first) + " and " + std::to_string(second) +
                   " both map to " + std::to_string(image)),
        first(first),
        second(second),
        image(image) {}
  std::uint32_t first;
  std::uint32_t second;
  std::uint32_t image;
};

class InvalidColoring : public TorusError {
 public:
  using TorusError::TorusError;
};

class SupportNotClosed : public TorusError {
 public:
  explicit SupportNotClosed(std::uint32_t escaping)
      : TorusError("Kempe support is not a union of cycles: vertex index " +
                   std::to_string(escaping) + " leaves it"),
        escaping_index(escaping) {}
  std::uint32_t escaping_index;
};

class StepNotUnit : public TorusError {
 public:
  using TorusError::TorusError;
};

class PartitionViolation : public TorusError {
 public:
  using TorusError::TorusError;
};

class UnclassifiedDefect : public TorusError {
 public:
  using TorusError::TorusError;
};

class NoReturn : public TorusError {
 public:
  NoReturn(int lane, std::string detail)
      : TorusError("lane " + std::to_string(lane) + " has no first return: " + detail), lane(lane) {}
  int lane;
};

class BlockMismatch : public TorusError {
 public:
  using TorusError::TorusError;
};

class UnsupportedFormat : public TorusError {
 public:
  using TorusError::TorusError;
};

class ParseError : public TorusError {
 public:
  using TorusError::TorusError;
};

}  // namespace torus
