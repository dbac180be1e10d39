#pragma once

#include "facering/chain_complex.hpp"
#include "facering/poset_sheaf.hpp"
#include "facering/simplicial_complex.hpp"

namespace facering {

/// Reduced cohomology of Σ with values in k^g computed through the
/// star-cover resolution of the constant sheaf on Σ\{∅}: the global-section
/// complex of that resolution is the simplicial cochain complex with one
/// summand per face, assembled here from the cover combinatorics. Degree 0
/// is returned reduced (the g constant sections are subtracted), so the
/// contract is equality with reduced_cohomology(Σ)·g in every degree.
/// Requires at least one vertex.
BettiVector closed_cover_cohomology(const SimplicialComplex& sc, const FieldSpec& field, long g);

/// Checks the simple-sheaf cohomology description on the full face poset:
/// H⁰(Σ, G(σ)) is g when σ is a facet and 0 otherwise, and for i ≥ 1
/// H^i(Σ, G(σ)) has dimension g · dim H̃^{i-1}(lk σ; k). Both clauses are the
/// single statement H^i = g · H̃^{i-1}(lk σ) once H̃^{-1}({∅}) = k is used.
bool simple_sheaf_cohomology_check(const SimplicialComplex& sc, const Face& sigma, long g,
                                   const FieldSpec& field);

}  // namespace facering
