#include "facering/poset_sheaf.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace facering {

FacePoset::FacePoset(const SimplicialComplex& sc, bool include_empty)
    : complex_(sc), include_empty_(include_empty) {
  for (const Face& f : complex_.faces()) {
    if (!include_empty_ && f.empty()) continue;
    index_[f.mask()] = static_cast<int>(points_.size());
    points_.push_back(f.mask());
  }
  below_.resize(points_.size());
  covers_.resize(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const std::uint32_t m = points_[i];
    for (std::size_t j = 0; j < points_.size(); ++j) {
      const std::uint32_t s = points_[j];
      if (s != m && (s & m) == s) {
        below_[i].push_back(static_cast<int>(j));
        if (std::popcount(m) == std::popcount(s) + 1) covers_[i].push_back(static_cast<int>(j));
      }
    }
  }
}

int FacePoset::index_of(std::uint32_t mask) const {
  const auto it = index_.find(mask);
  if (it == index_.end()) throw std::invalid_argument("face is not a point of the poset");
  return it->second;
}

const std::vector<std::vector<std::vector<int>>>& FacePoset::chains() const {
  if (!chains_.empty() || points_.empty()) return chains_;
  std::vector<std::vector<int>> level;
  for (int i = 0; i < point_count(); ++i) level.push_back({i});
  while (!level.empty()) {
    chains_.push_back(level);
    std::vector<std::vector<int>> next;
    for (const auto& chain : level)
      for (const int sub : below_[static_cast<std::size_t>(chain.back())]) {
        next.push_back(chain);
        next.back().push_back(sub);
      }
    level = std::move(next);
  }
  return chains_;
}

PosetSheaf::PosetSheaf(FacePoset poset, FieldSpec field, std::vector<long> stalk_dims,
                       std::map<std::pair<int, int>, ExactMatrix> covering_restrictions)
    : poset_(std::move(poset)),
      field_(field),
      stalk_dims_(std::move(stalk_dims)),
      cov_(std::move(covering_restrictions)) {
  if (stalk_dims_.size() != static_cast<std::size_t>(poset_.point_count()))
    throw std::invalid_argument("stalk dimension count mismatch");
  for (int i = 0; i < poset_.point_count(); ++i) {
    for (const int j : poset_.covering_subpoints(i)) {
      const auto it = cov_.find({i, j});
      if (it == cov_.end()) throw std::invalid_argument("missing covering restriction");
      if (it->second.rows() != static_cast<std::size_t>(stalk_dim(j)) ||
          it->second.cols() != static_cast<std::size_t>(stalk_dim(i)) ||
          !(it->second.field() == field_))
        throw std::invalid_argument("covering restriction has wrong shape or field");
    }
  }
}

const ExactMatrix& PosetSheaf::covering_restriction(int from_idx, int to_idx) const {
  const auto it = cov_.find({from_idx, to_idx});
  if (it == cov_.end()) throw std::invalid_argument("not a covering pair");
  return it->second;
}

ExactMatrix PosetSheaf::restriction(int from_idx, int to_idx) const {
  const std::uint32_t from = poset_.point_mask(from_idx);
  const std::uint32_t to = poset_.point_mask(to_idx);
  if ((to & from) != to) throw std::invalid_argument("restriction target is not a subface");
  ExactMatrix acc = ExactMatrix::identity(field_, static_cast<std::size_t>(stalk_dim(from_idx)));
  std::uint32_t current = from;
  int current_idx = from_idx;
  while (current != to) {
    // Deterministic path: peel the largest extra vertex first.
    const std::uint32_t extra = current & ~to;
    const int v = 31 - std::countl_zero(extra);
    const std::uint32_t next = current & ~(1u << v);
    const int next_idx = poset_.index_of(next);
    acc = covering_restriction(current_idx, next_idx).multiply(acc);
    current = next;
    current_idx = next_idx;
  }
  return acc;
}

void PosetSheaf::check_commutativity() const {
  for (int i = 0; i < poset_.point_count(); ++i) {
    const std::uint32_t m = poset_.point_mask(i);
    for (const int j : poset_.strict_subpoints(i)) {
      const std::uint32_t s = poset_.point_mask(j);
      if (std::popcount(m) != std::popcount(s) + 2) continue;
      const std::uint32_t extra = m & ~s;
      const int hi_v = 31 - std::countl_zero(extra);
      const int lo_v = std::countr_zero(extra);
      const int via_hi = poset_.index_of(m & ~(1u << hi_v));
      const int via_lo = poset_.index_of(m & ~(1u << lo_v));
      const ExactMatrix path_a =
          covering_restriction(via_hi, j).multiply(covering_restriction(i, via_hi));
      const ExactMatrix path_b =
          covering_restriction(via_lo, j).multiply(covering_restriction(i, via_lo));
      if (!(path_a == path_b))
        throw internal_error("sheaf restrictions do not commute at " +
                             Face::from_mask(m).to_string() + " over " +
                             Face::from_mask(s).to_string());
    }
  }
}

PosetSheaf simple_sheaf(const FacePoset& poset, const Face& sigma, long g,
                        const FieldSpec& field) {
  if (!poset.has_point(sigma.mask()))
    throw std::invalid_argument("simple_sheaf: face is not a point of the poset");
  if (g < 0) throw std::invalid_argument("negative stalk dimension");
  std::vector<long> dims(static_cast<std::size_t>(poset.point_count()), 0);
  dims[static_cast<std::size_t>(poset.index_of(sigma.mask()))] = g;
  std::map<std::pair<int, int>, ExactMatrix> cov;
  for (int i = 0; i < poset.point_count(); ++i)
    for (const int j : poset.covering_subpoints(i))
      cov.emplace(std::pair<int, int>{i, j},
                  ExactMatrix(field, static_cast<std::size_t>(dims[static_cast<std::size_t>(j)]),
                              static_cast<std::size_t>(dims[static_cast<std::size_t>(i)])));
  return PosetSheaf(poset, field, std::move(dims), std::move(cov));
}

PosetSheaf constant_sheaf(const FacePoset& poset, long g, const FieldSpec& field) {
  if (g < 0) throw std::invalid_argument("negative stalk dimension");
  std::vector<long> dims(static_cast<std::size_t>(poset.point_count()), g);
  std::map<std::pair<int, int>, ExactMatrix> cov;
  for (int i = 0; i < poset.point_count(); ++i)
    for (const int j : poset.covering_subpoints(i))
      cov.emplace(std::pair<int, int>{i, j},
                  ExactMatrix::identity(field, static_cast<std::size_t>(g)));
  return PosetSheaf(poset, field, std::move(dims), std::move(cov));
}

long global_sections(const PosetSheaf& sheaf, const std::vector<Face>& subcomplex_facets) {
  const FacePoset& poset = sheaf.poset();

  // Maximal faces of the subcomplex that are points of the poset.
  std::vector<std::uint32_t> masks;
  for (const Face& f : subcomplex_facets) {
    if (!poset.complex().contains(f))
      throw std::invalid_argument("global_sections: facet not in the complex");
    if (poset.has_point(f.mask())) masks.push_back(f.mask());
  }
  std::sort(masks.begin(), masks.end(), detail::graded_lex_less);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint32_t> maximal;
  for (const std::uint32_t m : masks) {
    bool contained = false;
    for (const std::uint32_t other : masks)
      if (other != m && (m & other) == m) contained = true;
    if (!contained) maximal.push_back(m);
  }
  if (maximal.empty()) return 0;

  std::vector<int> idx;
  std::vector<std::size_t> offset;
  std::size_t cols = 0;
  for (const std::uint32_t m : maximal) {
    idx.push_back(poset.index_of(m));
    offset.push_back(cols);
    cols += static_cast<std::size_t>(sheaf.stalk_dim(idx.back()));
  }

  // One block row per pair whose intersection exists in the poset:
  // ρ_{σ_i→τ} x_i - ρ_{σ_j→τ} x_j = 0.
  struct Pair {
    std::size_t i, j;
    int meet_idx;
  };
  std::vector<Pair> pairs;
  std::size_t rows = 0;
  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      const std::uint32_t meet = maximal[i] & maximal[j];
      if (!poset.has_point(meet)) continue;
      pairs.push_back({i, j, poset.index_of(meet)});
      rows += static_cast<std::size_t>(sheaf.stalk_dim(pairs.back().meet_idx));
    }

  ExactMatrix system(sheaf.field(), rows, cols);
  std::size_t row0 = 0;
  for (const Pair& p : pairs) {
    const ExactMatrix ri = sheaf.restriction(idx[p.i], p.meet_idx);
    const ExactMatrix rj = sheaf.restriction(idx[p.j], p.meet_idx);
    for (std::size_t r = 0; r < ri.rows(); ++r) {
      for (std::size_t c = 0; c < ri.cols(); ++c)
        if (!ri.entry_is_zero(r, c)) {
          if (sheaf.field().is_rationals())
            system.set(row0 + r, offset[p.i] + c, ri.rational_at(r, c));
          else
            system.set(row0 + r, offset[p.i] + c, static_cast<long long>(ri.residue_at(r, c)));
        }
      for (std::size_t c = 0; c < rj.cols(); ++c)
        if (!rj.entry_is_zero(r, c)) {
          if (sheaf.field().is_rationals())
            system.set(row0 + r, offset[p.j] + c, -rj.rational_at(r, c));
          else
            system.set(row0 + r, offset[p.j] + c,
                       -static_cast<long long>(rj.residue_at(r, c)));
        }
    }
    row0 += ri.rows();
  }
  return static_cast<long>(system.kernel_dim());
}

long global_sections(const PosetSheaf& sheaf) {
  std::vector<Face> facets = sheaf.poset().complex().facets();
  if (!sheaf.poset().includes_empty()) {
    std::erase_if(facets, [](const Face& f) { return f.empty(); });
  }
  return global_sections(sheaf, facets);
}

namespace detail {

FiniteChainComplex limit_cochain_complex(const PosetSheaf& sheaf) {
  const FacePoset& poset = sheaf.poset();
  const auto& chains = poset.chains();
  const FieldSpec& field = sheaf.field();

  if (chains.empty()) {
    return FiniteChainComplex(field, 0, FiniteChainComplex::Direction::up, {0}, {});
  }

  // Block offsets: C^k = ⊕_{chains c of length k+1} F(last(c)).
  std::vector<std::vector<std::size_t>> offsets(chains.size());
  std::vector<long> dims(chains.size(), 0);
  std::vector<std::map<std::vector<int>, std::size_t>> chain_index(chains.size());
  for (std::size_t k = 0; k < chains.size(); ++k) {
    std::size_t total = 0;
    for (std::size_t c = 0; c < chains[k].size(); ++c) {
      chain_index[k][chains[k][c]] = c;
      offsets[k].push_back(total);
      total += static_cast<std::size_t>(sheaf.stalk_dim(chains[k][c].back()));
    }
    dims[k] = static_cast<long>(total);
  }

  std::vector<ExactMatrix> diffs;
  for (std::size_t k = 0; k + 1 < chains.size(); ++k) {
    ExactMatrix d(field, static_cast<std::size_t>(dims[k + 1]), static_cast<std::size_t>(dims[k]));
    for (std::size_t c = 0; c < chains[k + 1].size(); ++c) {
      const std::vector<int>& chain = chains[k + 1][c];  // σ_0 ⊋ ... ⊋ σ_{k+1}
      const std::size_t row0 = offsets[k + 1][c];
      const long target_dim = sheaf.stalk_dim(chain.back());
      // Face deletions keeping the last point: coefficient blocks are ±I.
      for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
        std::vector<int> deleted = chain;
        deleted.erase(deleted.begin() + static_cast<std::ptrdiff_t>(j));
        const std::size_t col0 = offsets[k][chain_index[k].at(deleted)];
        const int sign = (j % 2 == 0) ? 1 : -1;
        for (long t = 0; t < target_dim; ++t)
          d.add(row0 + static_cast<std::size_t>(t), col0 + static_cast<std::size_t>(t), sign);
      }
      // Deleting the last point composes with the restriction to it.
      {
        std::vector<int> deleted(chain.begin(), chain.end() - 1);
        const std::size_t col0 = offsets[k][chain_index[k].at(deleted)];
        const int sign = (chain.size() % 2 == 0) ? -1 : 1;  // (-1)^{k+1}
        const ExactMatrix rho = sheaf.restriction(deleted.back(), chain.back());
        for (std::size_t r = 0; r < rho.rows(); ++r)
          for (std::size_t col = 0; col < rho.cols(); ++col)
            if (!rho.entry_is_zero(r, col)) {
              if (field.is_rationals()) {
                Rational v = rho.rational_at(r, col);
                if (sign < 0) v = -v;
                d.set(row0 + r, col0 + col, v);
              } else {
                long long v = static_cast<long long>(rho.residue_at(r, col));
                d.add(row0 + r, col0 + col, sign < 0 ? -v : v);
              }
            }
      }
    }
    diffs.push_back(std::move(d));
  }
  return FiniteChainComplex(field, 0, FiniteChainComplex::Direction::up, std::move(dims),
                            std::move(diffs));
}

}  // namespace detail

BettiVector sheaf_cohomology(const PosetSheaf& sheaf) {
  sheaf.check_commutativity();
  return detail::limit_cochain_complex(sheaf).homology_dims();
}

}  // namespace facering
