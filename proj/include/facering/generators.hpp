#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "facering/simplicial_complex.hpp"

namespace facering {

/// Visit every simplicial complex on the vertex set [0,n) exactly once, in a
/// deterministic order: all antichains of nonempty subsets whose union covers
/// [0,n), emitted in depth-first graded-lex order. n = 0 yields only {∅}.
/// Throws when n exceeds the cap (exhaustive enumeration is exponential).
void for_each_complex(int n, const std::function<void(const SimplicialComplex&)>& fn,
                      int cap = 5);

std::vector<SimplicialComplex> enumerate_all_complexes(int n, int cap = 5);

/// Seed-deterministic random complex: each nonempty subset of [0,n) is kept
/// as a candidate facet with probability `density` (graded-lex draw order),
/// the kept family is minimalized, and uncovered vertices are repaired by
/// adding them as 0-dimensional facets.
SimplicialComplex random_complex(int n, double density, std::uint64_t seed);

}  // namespace facering
