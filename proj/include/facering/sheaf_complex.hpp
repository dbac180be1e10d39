#pragma once

#include <vector>

#include "facering/koszul.hpp"
#include "facering/poset_sheaf.hpp"

namespace facering {

/// Bounded complex of sheaves on one face poset, cochain direction: term j
/// sits in degree lo+j, and maps[j][point] sends the stalk of term j at that
/// point into the stalk of term j+1. Differentials must commute with the
/// restrictions and square to zero stalk-wise.
class SheafComplex {
 public:
  SheafComplex(int lo, std::vector<PosetSheaf> terms,
               std::vector<std::vector<ExactMatrix>> maps);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  const FacePoset& poset() const { return terms_.front().poset(); }
  const FieldSpec& field() const { return terms_.front().field(); }
  const PosetSheaf& term(int degree) const {
    return terms_[static_cast<std::size_t>(degree - lo_)];
  }
  std::size_t term_count() const { return terms_.size(); }
  const ExactMatrix& map_at(int degree, int point_idx) const {
    return maps_[static_cast<std::size_t>(degree - lo_)][static_cast<std::size_t>(point_idx)];
  }

  /// Commutation with restrictions, stalk-wise composite zero, and the
  /// per-term commutativity checks. Throws internal_error on violation.
  void check_invariants() const;

 private:
  int lo_;
  std::vector<PosetSheaf> terms_;
  std::vector<std::vector<ExactMatrix>> maps_;
};

/// The multidegree-a strand of the Koszul complex of sheaves (the Koszul
/// resolution of k tensored with the structure sheaf): the degree -i term has
/// stalk basis {S : |S| = i, a - χ_S ≥ 0, supp(a) \ S ⊆ σ} at the face σ,
/// restrictions keep the surviving basis vectors, and the differential is the
/// strand Koszul differential stalk-wise. Global sections of the degree -i
/// term recover the module strand term.
SheafComplex koszul_sheaf_strand(const SimplicialComplex& sc, const MultiDegree& a,
                                 const FieldSpec& field);

/// Hypercohomology via the total complex of the double complex whose rows
/// are the derived-limit cochain complexes of the terms and whose columns are
/// the sheaf maps. For a Koszul sheaf strand, ℍ^{-i} must equal dim H_i of
/// the module strand; the acceptance suite quantifies that over the corpus.
BettiVector hypercohomology(const SheafComplex& complex);

}  // namespace facering
