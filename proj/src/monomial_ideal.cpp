#include "facering/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace facering {

namespace {

std::vector<std::uint32_t> minimalize(std::vector<std::uint32_t> masks) {
  std::sort(masks.begin(), masks.end(), detail::graded_lex_less);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint32_t> kept;
  for (const std::uint32_t m : masks) {
    bool divisible = false;
    for (const std::uint32_t k : kept)
      if ((m & k) == k) {  // earlier (smaller) generator divides m
        divisible = true;
        break;
      }
    if (!divisible) kept.push_back(m);
  }
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int variable_count, const std::vector<Face>& generators)
    : nvars_(variable_count) {
  if (variable_count < 0 || variable_count > 30)
    throw std::invalid_argument("variable count out of range");
  const std::uint32_t full = (variable_count == 0) ? 0u : ((1u << variable_count) - 1);
  std::vector<std::uint32_t> masks;
  masks.reserve(generators.size());
  for (const Face& g : generators) {
    if ((g.mask() & ~full) != 0)
      throw std::invalid_argument("generator uses a variable outside the ring");
    masks.push_back(g.mask());
  }
  gens_ = minimalize(std::move(masks));
}

std::vector<Face> MonomialIdeal::generators() const {
  std::vector<Face> out;
  out.reserve(gens_.size());
  for (const std::uint32_t m : gens_) out.push_back(Face::from_mask(m));
  return out;
}

MonomialIdeal MonomialIdeal::saturate_by(const Face& sigma) const {
  const std::uint32_t s = sigma.mask();
  std::vector<Face> gens;
  gens.reserve(gens_.size());
  for (const std::uint32_t m : gens_) gens.push_back(Face::from_mask(m & ~s));
  return MonomialIdeal(nvars_, gens);
}

MonomialIdeal MonomialIdeal::plus_variables(const std::vector<int>& vars) const {
  std::vector<Face> gens = generators();
  for (const int v : vars) gens.push_back(Face({v}));
  return MonomialIdeal(nvars_, gens);
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << Face::from_mask(gens_[i]).to_string();
  }
  os << ')';
  return os.str();
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& sc) {
  return MonomialIdeal(sc.vertex_count(), sc.minimal_nonfaces());
}

namespace {

/// The closed star of σ as a face family over the ambient vertex set, ghosts
/// permitted. Its minimal non-faces are the generators of the extended
/// closed-star ideal together with the vanishing variables.
SimplicialComplex ambient_closed_star(const SimplicialComplex& sc, const Face& sigma) {
  std::vector<Face> star_facets;
  for (const Face& f : sc.facets())
    if (f.contains(sigma)) star_facets.push_back(f);
  return SimplicialComplex::from_facets(sc.vertex_count(), star_facets,
                                        SimplicialComplex::VertexPolicy::allow_ghosts);
}

}  // namespace

std::pair<MonomialIdeal, MonomialIdeal> link_ideal_two_ways(const SimplicialComplex& sc,
                                                            const Face& sigma) {
  if (!sc.contains(sigma)) throw std::invalid_argument("link_ideal_two_ways: face not in complex");

  const Subcomplex link = sc.link(sigma);
  const MonomialIdeal direct = stanley_reisner_ideal(link.complex);

  // Route (b): closed-star ideal on the ambient variables, then keep the
  // generators supported on the link's variables and relabel.
  const SimplicialComplex star_family = ambient_closed_star(sc, sigma);
  std::uint32_t link_vars = 0;
  for (const int v : link.ambient_vertices) link_vars |= 1u << v;
  std::vector<Face> kept;
  for (const Face& g : star_family.minimal_nonfaces()) {
    const std::uint32_t m = g.mask();
    if ((m & sigma.mask()) == 0 && (m & ~link_vars) == 0) {
      kept.push_back(*link.from_ambient(g));
    }
  }
  const MonomialIdeal via_star(static_cast<int>(link.ambient_vertices.size()), kept);
  return {direct, via_star};
}

bool localization_identity_check(const SimplicialComplex& sc, const Face& sigma) {
  if (!sc.contains(sigma))
    throw std::invalid_argument("localization_identity_check: face not in complex");

  const MonomialIdeal lhs = stanley_reisner_ideal(sc).saturate_by(sigma);
  // Minimal non-faces of the ambient closed-star family already contain the
  // vanishing variables {v : σ ∪ {v} ∉ Σ} as degree-one generators.
  const MonomialIdeal star_ext = stanley_reisner_ideal(ambient_closed_star(sc, sigma));
  const MonomialIdeal rhs = star_ext.saturate_by(sigma);
  return lhs == rhs;
}

}  // namespace facering
