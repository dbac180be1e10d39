#include "facering/homology.hpp"

#include <map>

namespace facering {

FiniteChainComplex augmented_chain_complex(const SimplicialComplex& sc, const FieldSpec& field) {
  const int d = sc.dim();

  // Per-dimension bases in graded-lex order, with index lookup.
  std::vector<std::vector<std::uint32_t>> basis(static_cast<std::size_t>(d + 2));
  std::map<std::uint32_t, std::size_t> pos;
  for (const Face& f : sc.faces()) {
    pos[f.mask()] = basis[static_cast<std::size_t>(f.dim() + 1)].size();
    basis[static_cast<std::size_t>(f.dim() + 1)].push_back(f.mask());
  }

  std::vector<long> dims;
  dims.reserve(basis.size());
  for (const auto& b : basis) dims.push_back(static_cast<long>(b.size()));

  std::vector<ExactMatrix> diffs;
  for (int i = 0; i <= d; ++i) {
    const auto& source = basis[static_cast<std::size_t>(i + 1)];
    const auto& target = basis[static_cast<std::size_t>(i)];
    ExactMatrix m(field, target.size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col) {
      const Face f = Face::from_mask(source[col]);
      const auto& vs = f.vertices();
      for (std::size_t j = 0; j < vs.size(); ++j) {
        const std::uint32_t deleted = source[col] & ~(1u << vs[j]);
        m.add(pos.at(deleted), col, (j % 2 == 0) ? 1 : -1);
      }
    }
    diffs.push_back(std::move(m));
  }
  return FiniteChainComplex(field, -1, FiniteChainComplex::Direction::down, std::move(dims),
                            std::move(diffs));
}

BettiVector reduced_homology(const SimplicialComplex& sc, const FieldSpec& field) {
  return augmented_chain_complex(sc, field).homology_dims();
}

BettiVector reduced_cohomology(const SimplicialComplex& sc, const FieldSpec& field) {
  const FiniteChainComplex chain = augmented_chain_complex(sc, field);
  std::vector<long> dims;
  for (int i = chain.lo(); i <= chain.hi(); ++i) dims.push_back(chain.dim_at(i));
  std::vector<ExactMatrix> diffs;
  for (std::size_t j = 0; j < chain.differential_count(); ++j)
    diffs.push_back(chain.differential(j).transpose());
  return FiniteChainComplex(field, chain.lo(), FiniteChainComplex::Direction::up, std::move(dims),
                            std::move(diffs))
      .homology_dims();
}

}  // namespace facering
