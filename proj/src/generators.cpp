#include "facering/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace facering {

namespace {

void extend_antichain(const std::vector<std::uint32_t>& candidates, std::size_t start,
                      std::vector<std::uint32_t>& chosen, std::uint32_t covered,
                      std::uint32_t full, int n,
                      const std::function<void(const SimplicialComplex&)>& fn) {
  for (std::size_t k = start; k < candidates.size(); ++k) {
    const std::uint32_t c = candidates[k];
    // Candidates arrive in graded-lex order, so a new set can only swallow an
    // earlier one, never sit below it.
    bool ok = true;
    for (const std::uint32_t s : chosen)
      if ((c & s) == s) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(c);
    if ((covered | c) == full) {
      std::vector<Face> facets;
      facets.reserve(chosen.size());
      for (const std::uint32_t m : chosen) facets.push_back(Face::from_mask(m));
      fn(SimplicialComplex::from_facets(n, facets));
    }
    extend_antichain(candidates, k + 1, chosen, covered | c, full, n, fn);
    chosen.pop_back();
  }
}

double unit_real(std::mt19937_64& rng) {
  // Top 53 bits -> [0,1); avoids std::uniform_real_distribution, whose
  // output is implementation-defined.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void for_each_complex(int n, const std::function<void(const SimplicialComplex&)>& fn, int cap) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > cap) throw std::invalid_argument("exhaustive enumeration cap exceeded");
  if (n == 0) {
    fn(SimplicialComplex{});
    return;
  }
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t m = 1; m <= full; ++m) candidates.push_back(m);
  std::sort(candidates.begin(), candidates.end(), detail::graded_lex_less);
  std::vector<std::uint32_t> chosen;
  extend_antichain(candidates, 0, chosen, 0, full, n, fn);
}

std::vector<SimplicialComplex> enumerate_all_complexes(int n, int cap) {
  std::vector<SimplicialComplex> out;
  for_each_complex(n, [&](const SimplicialComplex& sc) { out.push_back(sc); }, cap);
  return out;
}

SimplicialComplex random_complex(int n, double density, std::uint64_t seed) {
  if (n < 0 || n > 30) throw std::invalid_argument("vertex count out of range");
  if (density < 0.0 || density > 1.0) throw std::invalid_argument("density outside [0,1]");
  if (n == 0) return SimplicialComplex{};

  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t m = 1; m <= full; ++m) candidates.push_back(m);
  std::sort(candidates.begin(), candidates.end(), detail::graded_lex_less);

  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> kept;
  for (const std::uint32_t m : candidates)
    if (unit_real(rng) < density) kept.push_back(m);

  std::vector<std::uint32_t> maximal;
  for (const std::uint32_t m : kept) {
    bool contained = false;
    for (const std::uint32_t other : kept)
      if (other != m && (m & other) == m) {
        contained = true;
        break;
      }
    if (!contained) maximal.push_back(m);
  }

  std::uint32_t covered = 0;
  for (const std::uint32_t m : maximal) covered |= m;
  for (int v = 0; v < n; ++v)
    if (!(covered & (1u << v))) maximal.push_back(1u << v);

  std::vector<Face> facets;
  facets.reserve(maximal.size());
  for (const std::uint32_t m : maximal) facets.push_back(Face::from_mask(m));
  return SimplicialComplex::from_facets(n, facets);
}

}  // namespace facering
