#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "facering/simplicial_complex.hpp"

namespace facering {

/// Squarefree monomial ideal, kept as its inclusion-minimal generator
/// supports. A generator equal to {} means the unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal(int variable_count, const std::vector<Face>& generators);
  static MonomialIdeal zero(int variable_count) { return MonomialIdeal(variable_count, {}); }

  int variable_count() const { return nvars_; }
  bool is_zero() const { return gens_.empty(); }
  std::vector<Face> generators() const;

  /// Saturation by the product of σ's variables: delete them from every
  /// generator and re-minimalize.
  MonomialIdeal saturate_by(const Face& sigma) const;
  /// Add the listed variables as degree-one generators and re-minimalize.
  MonomialIdeal plus_variables(const std::vector<int>& vars) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  std::string to_string() const;

 private:
  int nvars_ = 0;
  std::vector<std::uint32_t> gens_;  // graded-lex sorted antichain
};

/// Generators = minimal non-faces of Σ.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& sc);

/// Computes the ideal of lk σ two independent ways over the link's variable
/// set: (a) directly from the link complex; (b) from the closed-star ideal on
/// the ambient variables, keeping the generators that avoid σ and the
/// vertices outside the closed star. The two results coinciding is the
/// star/link generator identity this operation exists to check.
std::pair<MonomialIdeal, MonomialIdeal> link_ideal_two_ways(const SimplicialComplex& sc,
                                                            const Face& sigma);

/// Combinatorial form of the localization isomorphism at a face σ:
/// saturating the full Stanley-Reisner ideal by σ must equal saturating the
/// extended closed-star ideal plus the variables whose vertex does not sit
/// in the closed star.
bool localization_identity_check(const SimplicialComplex& sc, const Face& sigma);

}  // namespace facering
