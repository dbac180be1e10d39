#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "facering/field.hpp"

namespace facering {

/// Dense matrix with exact entries over a FieldSpec field.
///
/// Rationals are stored as arbitrary-precision fractions; GF(p) entries as
/// residues in [0,p). Rank uses fraction-free (Bareiss) elimination over the
/// rationals and modular elimination over GF(p), with first-nonzero pivoting
/// in column order, so results are deterministic.
class ExactMatrix {
 public:
  ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
  static ExactMatrix identity(FieldSpec field, std::size_t n);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t i, std::size_t j, long long value);
  void set(std::size_t i, std::size_t j, const Rational& value);
  void add(std::size_t i, std::size_t j, long long value);

  bool entry_is_zero(std::size_t i, std::size_t j) const;
  /// Entry accessor for rational matrices.
  const Rational& rational_at(std::size_t i, std::size_t j) const;
  /// Entry accessor for GF(p) matrices; value in [0,p).
  std::uint64_t residue_at(std::size_t i, std::size_t j) const;

  std::size_t rank() const;
  std::size_t kernel_dim() const { return cols_ - rank(); }
  bool is_zero() const;

  ExactMatrix multiply(const ExactMatrix& rhs) const;
  ExactMatrix transpose() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&);

 private:
  std::size_t idx(std::size_t i, std::size_t j) const { return i * cols_ + j; }
  std::size_t rank_rational() const;
  std::size_t rank_mod_p() const;

  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> qdata_;        // populated iff field is Q
  std::vector<std::uint64_t> pdata_;   // populated iff field is GF(p)
};

}  // namespace facering
