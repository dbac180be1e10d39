#pragma once

#include "facering/chain_complex.hpp"
#include "facering/simplicial_complex.hpp"

namespace facering {

/// Augmented chain complex of Σ over the field: degrees -1..dim Σ, with the
/// empty face spanning degree -1 and ∂σ = Σ_j (-1)^j (σ with vertex j
/// deleted). Basis order within each degree is graded-lex face order.
FiniteChainComplex augmented_chain_complex(const SimplicialComplex& sc, const FieldSpec& field);

/// Reduced homology dimensions over degrees -1..dim Σ.
BettiVector reduced_homology(const SimplicialComplex& sc, const FieldSpec& field);

/// Reduced cohomology, computed from the transposed differentials rather
/// than copied from homology.
BettiVector reduced_cohomology(const SimplicialComplex& sc, const FieldSpec& field);

}  // namespace facering
