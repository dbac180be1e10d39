#pragma once

#include <string>
#include <vector>

#include "facering/matrix.hpp"

namespace facering {

/// Dimensions indexed by degree over a finite interval; reads as zero outside
/// the stored range, and equality compares with that zero extension.
class BettiVector {
 public:
  BettiVector() = default;
  BettiVector(int lo, std::vector<long> dims) : lo_(lo), dims_(std::move(dims)) {}

  long at(int degree) const {
    const int k = degree - lo_;
    return (k >= 0 && k < static_cast<int>(dims_.size())) ? dims_[static_cast<std::size_t>(k)] : 0;
  }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  const std::vector<long>& dims() const { return dims_; }
  bool all_zero() const;
  long total() const;

  friend bool operator==(const BettiVector& a, const BettiVector& b);
  std::string to_string() const;

 private:
  int lo_ = 0;
  std::vector<long> dims_;
};

/// A bounded complex of exact matrices over one field. Direction::down holds
/// differentials from degree i to i-1 (chain complexes); Direction::up from
/// i to i+1 (cochain complexes). Either way diffs[j] sits between the terms
/// of degrees lo+j and lo+j+1.
class FiniteChainComplex {
 public:
  enum class Direction { down, up };

  FiniteChainComplex(FieldSpec field, int lo, Direction dir, std::vector<long> dims,
                     std::vector<ExactMatrix> diffs);

  const FieldSpec& field() const { return field_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  Direction direction() const { return dir_; }
  long dim_at(int degree) const;
  std::size_t differential_count() const { return diffs_.size(); }
  /// diffs[j] couples degrees lo+j and lo+j+1 (which is source depends on the
  /// direction).
  const ExactMatrix& differential(std::size_t j) const { return diffs_[j]; }

  /// Asserts d∘d = 0; throws internal_error otherwise.
  void check_composite_zero() const;

  /// Homology (or cohomology) dimensions per degree:
  /// dim H_i = dim ker(outgoing at i) - rank(incoming at i).
  BettiVector homology_dims() const;

 private:
  FieldSpec field_;
  int lo_;
  Direction dir_;
  std::vector<long> dims_;
  std::vector<ExactMatrix> diffs_;
};

}  // namespace facering
