#include "facering/sheaf_complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace facering {

SheafComplex::SheafComplex(int lo, std::vector<PosetSheaf> terms,
                           std::vector<std::vector<ExactMatrix>> maps)
    : lo_(lo), terms_(std::move(terms)), maps_(std::move(maps)) {
  if (terms_.empty()) throw std::invalid_argument("sheaf complex needs at least one term");
  if (maps_.size() + 1 != terms_.size())
    throw std::invalid_argument("sheaf complex: map count mismatch");
  const FacePoset& p = terms_.front().poset();
  for (const PosetSheaf& t : terms_)
    if (!(t.poset() == p) || !(t.field() == terms_.front().field()))
      throw std::invalid_argument("sheaf complex: terms live on different posets or fields");
  for (std::size_t j = 0; j < maps_.size(); ++j) {
    if (maps_[j].size() != static_cast<std::size_t>(p.point_count()))
      throw std::invalid_argument("sheaf complex: one map per point required");
    for (int q = 0; q < p.point_count(); ++q) {
      const ExactMatrix& m = maps_[j][static_cast<std::size_t>(q)];
      if (m.rows() != static_cast<std::size_t>(terms_[j + 1].stalk_dim(q)) ||
          m.cols() != static_cast<std::size_t>(terms_[j].stalk_dim(q)))
        throw std::invalid_argument("sheaf complex: map shape mismatch");
    }
  }
}

void SheafComplex::check_invariants() const {
  const FacePoset& p = poset();
  for (const PosetSheaf& t : terms_) t.check_commutativity();

  // Differentials commute with restrictions on covering pairs.
  for (std::size_t j = 0; j < maps_.size(); ++j) {
    for (int q = 0; q < p.point_count(); ++q) {
      for (const int sub : p.covering_subpoints(q)) {
        const ExactMatrix lhs =
            terms_[j + 1].covering_restriction(q, sub).multiply(maps_[j][static_cast<std::size_t>(q)]);
        const ExactMatrix rhs =
            maps_[j][static_cast<std::size_t>(sub)].multiply(terms_[j].covering_restriction(q, sub));
        if (!(lhs == rhs))
          throw internal_error("sheaf complex: differential does not commute with restriction");
      }
    }
  }

  // Stalk-wise composite zero.
  for (std::size_t j = 0; j + 1 < maps_.size(); ++j)
    for (int q = 0; q < p.point_count(); ++q)
      if (!maps_[j + 1][static_cast<std::size_t>(q)]
               .multiply(maps_[j][static_cast<std::size_t>(q)])
               .is_zero())
        throw internal_error("sheaf complex: stalk-wise composite is nonzero");
}

SheafComplex koszul_sheaf_strand(const SimplicialComplex& sc, const MultiDegree& a,
                                 const FieldSpec& field) {
  if (a.n() != sc.vertex_count())
    throw std::invalid_argument("multidegree length differs from vertex count");
  if (!a.is_squarefree())
    throw std::invalid_argument("koszul_sheaf_strand expects a squarefree multidegree");

  const FacePoset poset = FacePoset::all_faces(sc);
  const std::uint32_t supp = a.support_mask();
  const int m = std::popcount(supp);

  // Subsets of supp(a) by cardinality, graded-lex.
  std::vector<std::vector<std::uint32_t>> by_card(static_cast<std::size_t>(m + 1));
  {
    std::vector<std::uint32_t> subsets;
    std::uint32_t sub = supp;
    while (true) {
      subsets.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & supp;
    }
    std::sort(subsets.begin(), subsets.end(), detail::graded_lex_less);
    for (const std::uint32_t S : subsets)
      by_card[static_cast<std::size_t>(std::popcount(S))].push_back(S);
  }

  // Stalk basis of the degree -i term at face σ: S of size i with
  // supp(a) \ S ⊆ σ. Bases stay ordered as in by_card.
  const auto survives = [&](std::uint32_t S, std::uint32_t sigma) {
    return (supp & ~S & ~sigma) == 0;
  };

  std::vector<PosetSheaf> terms;
  std::vector<std::vector<std::vector<std::uint32_t>>> term_basis;  // [term][point] -> S list
  for (int i = m; i >= 0; --i) {
    std::vector<std::vector<std::uint32_t>> basis(static_cast<std::size_t>(poset.point_count()));
    std::vector<long> dims(static_cast<std::size_t>(poset.point_count()), 0);
    for (int q = 0; q < poset.point_count(); ++q) {
      const std::uint32_t sigma = poset.point_mask(q);
      for (const std::uint32_t S : by_card[static_cast<std::size_t>(i)])
        if (survives(S, sigma)) basis[static_cast<std::size_t>(q)].push_back(S);
      dims[static_cast<std::size_t>(q)] =
          static_cast<long>(basis[static_cast<std::size_t>(q)].size());
    }
    // Restrictions keep surviving basis vectors and kill the rest.
    std::map<std::pair<int, int>, ExactMatrix> cov;
    for (int q = 0; q < poset.point_count(); ++q) {
      for (const int sub : poset.covering_subpoints(q)) {
        ExactMatrix rho(field, static_cast<std::size_t>(dims[static_cast<std::size_t>(sub)]),
                        static_cast<std::size_t>(dims[static_cast<std::size_t>(q)]));
        const auto& src = basis[static_cast<std::size_t>(q)];
        const auto& dst = basis[static_cast<std::size_t>(sub)];
        for (std::size_t c = 0; c < src.size(); ++c) {
          const auto it = std::find(dst.begin(), dst.end(), src[c]);
          if (it != dst.end())
            rho.set(static_cast<std::size_t>(it - dst.begin()), c, 1);
        }
        cov.emplace(std::pair<int, int>{q, sub}, std::move(rho));
      }
    }
    terms.emplace_back(poset, field, std::move(dims), std::move(cov));
    term_basis.push_back(std::move(basis));
  }

  // Stalk-wise strand Koszul differential from degree -i to -i+1.
  std::vector<std::vector<ExactMatrix>> maps;
  for (int j = 0; j + 1 < static_cast<int>(terms.size()); ++j) {
    std::vector<ExactMatrix> per_point;
    for (int q = 0; q < poset.point_count(); ++q) {
      const std::uint32_t sigma = poset.point_mask(q);
      const auto& src = term_basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(q)];
      const auto& dst = term_basis[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(q)];
      ExactMatrix d(field, dst.size(), src.size());
      for (std::size_t c = 0; c < src.size(); ++c) {
        const std::uint32_t S = src[c];
        int position = 0;
        for (int s = 0; s < a.n(); ++s) {
          if (!(S & (1u << s))) continue;
          const std::uint32_t T = S & ~(1u << s);
          if (survives(T, sigma)) {
            const auto it = std::find(dst.begin(), dst.end(), T);
            d.add(static_cast<std::size_t>(it - dst.begin()), c,
                  (position % 2 == 0) ? 1 : -1);
          }
          ++position;
        }
      }
      per_point.push_back(std::move(d));
    }
    maps.push_back(std::move(per_point));
  }

  return SheafComplex(-m, std::move(terms), std::move(maps));
}

BettiVector hypercohomology(const SheafComplex& complex) {
  complex.check_invariants();
  const FacePoset& poset = complex.poset();
  const FieldSpec& field = complex.field();
  const auto& chains = poset.chains();
  const int rows = static_cast<int>(complex.term_count());       // sheaf degrees lo..lo+rows-1
  const int cols = static_cast<int>(chains.size());              // chain degrees 0..cols-1

  if (cols == 0) return BettiVector(complex.lo(), std::vector<long>{0});

  // Cochain data per row: dims and differentials of the limit complex.
  std::vector<FiniteChainComplex> row_complex;
  row_complex.reserve(static_cast<std::size_t>(rows));
  for (int p = 0; p < rows; ++p)
    row_complex.push_back(detail::limit_cochain_complex(complex.term(complex.lo() + p)));

  // Block offsets within each total degree r = (lo+p) + q.
  const int r_lo = complex.lo();
  const int r_hi = complex.hi() + cols - 1;
  const auto blocks_of = [&](int r) {
    std::vector<std::pair<int, int>> blocks;  // (p index, q)
    for (int p = 0; p < rows; ++p) {
      const int q = r - (complex.lo() + p);
      if (q >= 0 && q < cols) blocks.emplace_back(p, q);
    }
    return blocks;
  };

  std::vector<long> total_dims;
  std::vector<std::map<std::pair<int, int>, std::size_t>> offsets;
  for (int r = r_lo; r <= r_hi; ++r) {
    const auto blocks = blocks_of(r);
    std::map<std::pair<int, int>, std::size_t> off;
    std::size_t total = 0;
    for (const auto& [p, q] : blocks) {
      off[{p, q}] = total;
      total += static_cast<std::size_t>(row_complex[static_cast<std::size_t>(p)].dim_at(q));
    }
    offsets.push_back(std::move(off));
    total_dims.push_back(static_cast<long>(total));
  }

  // Chain block offsets inside one row cochain space, and last-face stalks.
  // d_total = d_sheaf + (-1)^p d_limit.
  std::vector<ExactMatrix> total_diffs;
  for (int r = r_lo; r < r_hi; ++r) {
    const std::size_t ri = static_cast<std::size_t>(r - r_lo);
    ExactMatrix D(field, static_cast<std::size_t>(total_dims[ri + 1]),
                  static_cast<std::size_t>(total_dims[ri]));
    for (const auto& [p, q] : blocks_of(r)) {
      const std::size_t src_off = offsets[ri].at({p, q});
      const FiniteChainComplex& row = row_complex[static_cast<std::size_t>(p)];
      // Vertical: limit differential within row p, sign (-1)^{lo+p}.
      if (q + 1 < cols && offsets[ri + 1].count({p, q + 1})) {
        const std::size_t dst_off = offsets[ri + 1].at({p, q + 1});
        const ExactMatrix& dq = row.differential(static_cast<std::size_t>(q));
        const bool negate = ((complex.lo() + p) % 2 + 2) % 2 == 1;
        for (std::size_t rr = 0; rr < dq.rows(); ++rr)
          for (std::size_t cc = 0; cc < dq.cols(); ++cc)
            if (!dq.entry_is_zero(rr, cc)) {
              if (field.is_rationals()) {
                Rational v = dq.rational_at(rr, cc);
                if (negate) v = -v;
                D.set(dst_off + rr, src_off + cc, v);
              } else {
                long long v = static_cast<long long>(dq.residue_at(rr, cc));
                D.add(dst_off + rr, src_off + cc, negate ? -v : v);
              }
            }
      }
      // Horizontal: sheaf map applied at the last face of each chain.
      if (p + 1 < rows && offsets[ri + 1].count({p + 1, q})) {
        const std::size_t dst_off = offsets[ri + 1].at({p + 1, q});
        // Walk the chains of length q+1 accumulating block offsets in both
        // the source row (term p) and target row (term p+1).
        std::size_t src_block = 0, dst_block = 0;
        for (const auto& chain : chains[static_cast<std::size_t>(q)]) {
          const int last = chain.back();
          const ExactMatrix& f = complex.map_at(complex.lo() + p, last);
          for (std::size_t rr = 0; rr < f.rows(); ++rr)
            for (std::size_t cc = 0; cc < f.cols(); ++cc)
              if (!f.entry_is_zero(rr, cc)) {
                if (field.is_rationals())
                  D.set(dst_off + dst_block + rr, src_off + src_block + cc,
                        f.rational_at(rr, cc));
                else
                  D.add(dst_off + dst_block + rr, src_off + src_block + cc,
                        static_cast<long long>(f.residue_at(rr, cc)));
              }
          src_block += f.cols();
          dst_block += f.rows();
        }
      }
    }
    total_diffs.push_back(std::move(D));
  }

  return FiniteChainComplex(field, r_lo, FiniteChainComplex::Direction::up,
                            std::move(total_dims), std::move(total_diffs))
      .homology_dims();
}

}  // namespace facering
