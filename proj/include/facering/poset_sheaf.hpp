#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "facering/chain_complex.hpp"
#include "facering/simplicial_complex.hpp"

namespace facering {

/// The face poset of Σ as a finite topological space (open sets are the
/// subcomplexes, i.e. the reverse face order). Points are either all faces
/// including ∅, or the subspace of nonempty faces.
class FacePoset {
 public:
  static FacePoset all_faces(const SimplicialComplex& sc) { return FacePoset(sc, true); }
  static FacePoset nonempty_faces(const SimplicialComplex& sc) { return FacePoset(sc, false); }

  const SimplicialComplex& complex() const { return complex_; }
  bool includes_empty() const { return include_empty_; }
  int point_count() const { return static_cast<int>(points_.size()); }
  Face point(int idx) const { return Face::from_mask(points_[static_cast<std::size_t>(idx)]); }
  std::uint32_t point_mask(int idx) const { return points_[static_cast<std::size_t>(idx)]; }
  bool has_point(std::uint32_t mask) const { return index_.count(mask) > 0; }
  int index_of(std::uint32_t mask) const;

  /// Points strictly below idx (strict subfaces present in the poset),
  /// ascending point order.
  const std::vector<int>& strict_subpoints(int idx) const {
    return below_[static_cast<std::size_t>(idx)];
  }
  /// Covering subpoints: one vertex removed, still in the poset.
  const std::vector<int>& covering_subpoints(int idx) const {
    return covers_[static_cast<std::size_t>(idx)];
  }

  /// Strictly decreasing chains σ_0 ⊋ σ_1 ⊋ ... ⊋ σ_k grouped by k, as point
  /// indices, in a deterministic order. chains()[k] lists the length-(k+1)
  /// chains.
  const std::vector<std::vector<std::vector<int>>>& chains() const;

  friend bool operator==(const FacePoset& a, const FacePoset& b) {
    return a.complex_ == b.complex_ && a.include_empty_ == b.include_empty_;
  }

 private:
  FacePoset(const SimplicialComplex& sc, bool include_empty);

  SimplicialComplex complex_;
  bool include_empty_;
  std::vector<std::uint32_t> points_;  // graded-lex
  std::unordered_map<std::uint32_t, int> index_;
  std::vector<std::vector<int>> below_;
  std::vector<std::vector<int>> covers_;
  mutable std::vector<std::vector<std::vector<int>>> chains_;  // lazily built
};

/// Finite-dimensional sheaf of k-vector spaces on a face poset, stored as a
/// stalk dimension per point and a restriction matrix per covering pair;
/// longer restrictions are composites, well defined once the commutativity
/// check passes.
class PosetSheaf {
 public:
  PosetSheaf(FacePoset poset, FieldSpec field, std::vector<long> stalk_dims,
             std::map<std::pair<int, int>, ExactMatrix> covering_restrictions);

  const FacePoset& poset() const { return poset_; }
  const FieldSpec& field() const { return field_; }
  long stalk_dim(int idx) const { return stalk_dims_[static_cast<std::size_t>(idx)]; }
  const ExactMatrix& covering_restriction(int from_idx, int to_idx) const;

  /// Restriction along any face pair τ ⊆ σ, composed along covering steps.
  ExactMatrix restriction(int from_idx, int to_idx) const;

  /// For every τ ⊂ σ with |σ\τ| = 2, the two covering paths must agree.
  void check_commutativity() const;

 private:
  FacePoset poset_;
  FieldSpec field_;
  std::vector<long> stalk_dims_;
  std::map<std::pair<int, int>, ExactMatrix> cov_;
};

/// Stalk g at σ, zero elsewhere, zero restrictions.
PosetSheaf simple_sheaf(const FacePoset& poset, const Face& sigma, long g,
                        const FieldSpec& field);

/// Stalk g everywhere, identity restrictions.
PosetSheaf constant_sheaf(const FacePoset& poset, long g, const FieldSpec& field);

/// Sections over the subcomplex spanned by the given facets: compatible
/// tuples over the maximal faces, glued along pairwise intersections that
/// exist in the poset. Computed as the kernel of a difference matrix.
long global_sections(const PosetSheaf& sheaf, const std::vector<Face>& subcomplex_facets);

/// Sections over the whole poset.
long global_sections(const PosetSheaf& sheaf);

/// Sheaf cohomology via the derived-limit cochain complex over strictly
/// decreasing chains: C^k = ⊕_{σ_0 ⊋ ... ⊋ σ_k} F(σ_k) with
/// (dφ)(σ_0⊋...⊋σ_{k+1}) = Σ_{j≤k} (-1)^j φ(delete σ_j)
///                       + (-1)^{k+1} ρ_{σ_k→σ_{k+1}} φ(σ_0⊋...⊋σ_k).
/// H⁰ equals global_sections by construction of the complex; the suites in
/// the tests cross-validate the higher degrees.
BettiVector sheaf_cohomology(const PosetSheaf& sheaf);

namespace detail {
/// The cochain complex above as matrices (shared by hypercohomology).
FiniteChainComplex limit_cochain_complex(const PosetSheaf& sheaf);
}  // namespace detail

}  // namespace facering
