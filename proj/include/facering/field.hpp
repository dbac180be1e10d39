#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace facering {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a checked invariant or a cross-validated identity fails.
/// Reaching this means the artifact itself is inconsistent, not the input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Coefficient field: the rationals, or a prime field GF(p).
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec prime(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  /// Characteristic p of a prime field; only valid when !is_rationals().
  std::uint64_t p() const { return p_; }

  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;  // 0 encodes the rationals
};

}  // namespace facering
