#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace liebranch {

/// Raised whenever a checked integer operation leaves the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

/// Raised when a finiteness or consistency certificate cannot be established.
class CertificationError : public std::runtime_error {
 public:
  explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 addition overflow");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 subtraction overflow");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 multiplication overflow");
  return r;
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("uint64 addition overflow");
  return r;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("uint64 multiplication overflow");
  return r;
}

// Narrowing conversion of a signed count to a nonnegative multiplicity.
inline std::uint64_t to_count(std::int64_t v) {
  if (v < 0) throw std::logic_error("negative multiplicity " + std::to_string(v));
  return static_cast<std::uint64_t>(v);
}

inline std::int64_t to_signed(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) throw OverflowError("count exceeds int64 range");
  return static_cast<std::int64_t>(v);
}

}  // namespace checked
}  // namespace liebranch
