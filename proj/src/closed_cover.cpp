#include "facering/closed_cover.hpp"

#include <map>
#include <stdexcept>

#include "facering/homology.hpp"

namespace facering {

BettiVector closed_cover_cohomology(const SimplicialComplex& sc, const FieldSpec& field, long g) {
  if (sc.vertex_count() < 1)
    throw std::invalid_argument("closed_cover_cohomology needs at least one vertex");
  if (g < 0) throw std::invalid_argument("negative coefficient dimension");
  const int d = sc.dim();

  // One summand per nonempty face: the sections of the constant sheaf on the
  // star of that face. Term k collects the k-dimensional faces.
  std::vector<std::vector<std::uint32_t>> basis(static_cast<std::size_t>(d + 1));
  std::map<std::uint32_t, std::size_t> pos;
  for (const Face& f : sc.faces()) {
    if (f.empty()) continue;
    pos[f.mask()] = basis[static_cast<std::size_t>(f.dim())].size();
    basis[static_cast<std::size_t>(f.dim())].push_back(f.mask());
  }

  std::vector<long> dims;
  dims.reserve(basis.size());
  for (const auto& b : basis) dims.push_back(g * static_cast<long>(b.size()));

  // d(a)_{j_0..j_{k+1}} = Σ_h (-1)^h a_{j_0..ĵ_h..j_{k+1}}, the projection of
  // a smaller star into a bigger tuple's star being the identity on G.
  std::vector<ExactMatrix> diffs;
  for (int k = 0; k + 1 <= d; ++k) {
    const auto& target = basis[static_cast<std::size_t>(k + 1)];
    const auto& source = basis[static_cast<std::size_t>(k)];
    ExactMatrix m(field, static_cast<std::size_t>(g) * target.size(),
                  static_cast<std::size_t>(g) * source.size());
    for (std::size_t row_block = 0; row_block < target.size(); ++row_block) {
      const Face f = Face::from_mask(target[row_block]);
      const auto& vs = f.vertices();
      for (std::size_t h = 0; h < vs.size(); ++h) {
        const std::uint32_t deleted = target[row_block] & ~(1u << vs[h]);
        const std::size_t col_block = pos.at(deleted);
        const int sign = (h % 2 == 0) ? 1 : -1;
        for (long t = 0; t < g; ++t)
          m.add(row_block * static_cast<std::size_t>(g) + static_cast<std::size_t>(t),
                col_block * static_cast<std::size_t>(g) + static_cast<std::size_t>(t), sign);
      }
    }
    diffs.push_back(std::move(m));
  }

  BettiVector raw = FiniteChainComplex(field, 0, FiniteChainComplex::Direction::up,
                                       std::move(dims), std::move(diffs))
                        .homology_dims();

  // The cover complex computes unreduced cohomology in degree 0; remove the
  // constant sections.
  std::vector<long> adjusted;
  for (int i = raw.lo(); i <= raw.hi(); ++i) adjusted.push_back(raw.at(i));
  adjusted[0] -= g;
  if (adjusted[0] < 0) throw internal_error("closed cover: fewer sections than constants");
  return BettiVector(0, std::move(adjusted));
}

bool simple_sheaf_cohomology_check(const SimplicialComplex& sc, const Face& sigma, long g,
                                   const FieldSpec& field) {
  if (!sc.contains(sigma)) throw std::invalid_argument("face not in complex");
  const FacePoset poset = FacePoset::all_faces(sc);
  const BettiVector coh = sheaf_cohomology(simple_sheaf(poset, sigma, g, field));

  const long h0_expected = sc.is_facet(sigma) ? g : 0;
  if (coh.at(0) != h0_expected) return false;

  const BettiVector link_coh = reduced_cohomology(sc.link(sigma).complex, field);
  const int hi = std::max(coh.hi(), link_coh.hi() + 1);
  for (int i = 1; i <= hi; ++i)
    if (coh.at(i) != g * link_coh.at(i - 1)) return false;
  return true;
}

}  // namespace facering
