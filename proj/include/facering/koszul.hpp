#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facering/chain_complex.hpp"
#include "facering/simplicial_complex.hpp"

namespace facering {

/// Exponent vector in the multigrading of k[X_0..X_{n-1}].
class MultiDegree {
 public:
  explicit MultiDegree(std::vector<int> exponents);
  static MultiDegree squarefree(int n, const Face& support);
  static MultiDegree zero(int n) { return MultiDegree(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  const std::vector<int>& exponents() const { return a_; }
  int n() const { return static_cast<int>(a_.size()); }
  bool is_squarefree() const;
  std::uint32_t support_mask() const;
  int total() const;
  std::string to_string() const;

 private:
  std::vector<int> a_;
};

/// The multidegree-a strand of the Koszul complex of k[Σ]: homological
/// degree i has basis {S ⊆ supp(a) : |S| = i, supp(a - χ_S) ∈ Σ} and
/// d(e_S) = Σ_{s∈S} (-1)^{pos of s in S} [supp(a - χ_{S\{s}}) ∈ Σ] e_{S\{s}}.
/// dim H_i of this strand is the multigraded Betti number β_{i,a}.
/// Only squarefree degrees are accepted here; the vanishing of the others is
/// what nonsquarefree_vanishing_check samples.
FiniteChainComplex koszul_strand(const SimplicialComplex& sc, const MultiDegree& a,
                                 const FieldSpec& field);

namespace detail {
/// Strand for an arbitrary exponent vector (basis rule as above with the
/// general supp(a - χ_S) condition). Used by the vanishing check.
FiniteChainComplex koszul_strand_any(const SimplicialComplex& sc, const MultiDegree& a,
                                     const FieldSpec& field);
}  // namespace detail

/// β_i = dim Tor_i(k[Σ], k), as the sum of strand homology over all
/// squarefree multidegrees, with the per-degree breakdown retained.
struct BettiTable {
  FieldSpec field = FieldSpec::rationals();
  int n = 0;
  std::vector<long> beta;  // indices 0..n
  /// Squarefree degrees (by support mask, graded-lex) with nonzero strand
  /// homology; value = strand homology dims from degree 0.
  std::vector<std::pair<std::uint32_t, std::vector<long>>> per_degree;

  long projective_dimension() const;
  long depth() const { return n - projective_dimension(); }
  std::string to_string() const;
};

BettiTable betti_numbers(const SimplicialComplex& sc, const FieldSpec& field);

/// Samples exponent vectors with an entry equal to 2 (max entry 2,
/// |a| ≤ n+2) and reports whether every sampled strand is exact. A true
/// result backs restricting betti_numbers to squarefree degrees.
bool nonsquarefree_vanishing_check(const SimplicialComplex& sc, const FieldSpec& field,
                                   int samples, std::uint64_t seed);

/// Cohen-Macaulay verdict from the Betti table: k[Σ] has depth n - projdim
/// and Krull dimension dim Σ + 1; CM means the two agree, equivalently
/// β_i = 0 for every i > n - dim Σ - 1.
struct AlgebraicVerdict {
  FieldSpec field = FieldSpec::rationals();
  bool is_cm = false;
  long depth = 0;
  long projdim = 0;
  long krull_dim = 0;
  /// Smallest i > n - dim Σ - 1 with β_i ≠ 0, when not CM.
  std::optional<long> witness_i;
};

AlgebraicVerdict is_cm_algebraic(const SimplicialComplex& sc, const FieldSpec& field);

}  // namespace facering
