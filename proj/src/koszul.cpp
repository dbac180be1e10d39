#include "facering/koszul.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace facering {

MultiDegree::MultiDegree(std::vector<int> exponents) : a_(std::move(exponents)) {
  if (a_.size() > 30) throw std::invalid_argument("multidegree too long");
  for (const int e : a_)
    if (e < 0) throw std::invalid_argument("negative exponent in multidegree");
}

MultiDegree MultiDegree::squarefree(int n, const Face& support) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  for (const int v : support.vertices()) {
    if (v >= n) throw std::invalid_argument("support outside variable range");
    a[static_cast<std::size_t>(v)] = 1;
  }
  return MultiDegree(std::move(a));
}

bool MultiDegree::is_squarefree() const {
  return std::all_of(a_.begin(), a_.end(), [](int e) { return e <= 1; });
}

std::uint32_t MultiDegree::support_mask() const {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] > 0) m |= 1u << i;
  return m;
}

int MultiDegree::total() const {
  int t = 0;
  for (const int e : a_) t += e;
  return t;
}

std::string MultiDegree::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) os << ',';
    os << a_[i];
  }
  os << ')';
  return os.str();
}

namespace detail {

namespace {

/// Support of a - χ_S: drop from supp(a) the members of S whose exponent is
/// exactly one.
std::uint32_t support_after(const MultiDegree& a, std::uint32_t S) {
  std::uint32_t supp = a.support_mask();
  for (int v = 0; v < a.n(); ++v)
    if ((S & (1u << v)) && a.exponents()[static_cast<std::size_t>(v)] == 1) supp &= ~(1u << v);
  return supp;
}

}  // namespace

FiniteChainComplex koszul_strand_any(const SimplicialComplex& sc, const MultiDegree& a,
                                     const FieldSpec& field) {
  const std::uint32_t supp = a.support_mask();
  const int m = std::popcount(supp);

  // Basis per homological degree, graded-lex within each.
  std::vector<std::vector<std::uint32_t>> basis(static_cast<std::size_t>(m + 1));
  std::vector<std::map<std::uint32_t, std::size_t>> pos(static_cast<std::size_t>(m + 1));
  std::vector<std::uint32_t> subsets;
  std::uint32_t sub = supp;
  while (true) {
    subsets.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & supp;
  }
  std::sort(subsets.begin(), subsets.end(), facering::detail::graded_lex_less);
  for (const std::uint32_t S : subsets) {
    if (!sc.contains_mask(support_after(a, S))) continue;
    const auto i = static_cast<std::size_t>(std::popcount(S));
    pos[i][S] = basis[i].size();
    basis[i].push_back(S);
  }

  std::vector<long> dims;
  dims.reserve(basis.size());
  for (const auto& b : basis) dims.push_back(static_cast<long>(b.size()));

  std::vector<ExactMatrix> diffs;
  for (int i = 1; i <= m; ++i) {
    const auto& source = basis[static_cast<std::size_t>(i)];
    const auto& target = basis[static_cast<std::size_t>(i - 1)];
    ExactMatrix d(field, target.size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col) {
      const std::uint32_t S = source[col];
      int position = 0;
      for (int s = 0; s < a.n(); ++s) {
        if (!(S & (1u << s))) continue;
        const std::uint32_t T = S & ~(1u << s);
        const auto it = pos[static_cast<std::size_t>(i - 1)].find(T);
        if (it != pos[static_cast<std::size_t>(i - 1)].end())
          d.add(it->second, col, (position % 2 == 0) ? 1 : -1);
        ++position;
      }
    }
    diffs.push_back(std::move(d));
  }
  return FiniteChainComplex(field, 0, FiniteChainComplex::Direction::down, std::move(dims),
                            std::move(diffs));
}

}  // namespace detail

FiniteChainComplex koszul_strand(const SimplicialComplex& sc, const MultiDegree& a,
                                 const FieldSpec& field) {
  if (a.n() != sc.vertex_count())
    throw std::invalid_argument("multidegree length differs from vertex count");
  if (!a.is_squarefree())
    throw std::invalid_argument("koszul_strand expects a squarefree multidegree");
  return detail::koszul_strand_any(sc, a, field);
}

long BettiTable::projective_dimension() const {
  long pd = 0;
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] != 0) pd = static_cast<long>(i);
  return pd;
}

std::string BettiTable::to_string() const {
  std::ostringstream os;
  os << field.name() << " beta=(";
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (i) os << ',';
    os << beta[i];
  }
  os << ')';
  return os.str();
}

BettiTable betti_numbers(const SimplicialComplex& sc, const FieldSpec& field) {
  const int n = sc.vertex_count();
  BettiTable table;
  table.field = field;
  table.n = n;
  table.beta.assign(static_cast<std::size_t>(n + 1), 0);

  std::vector<std::uint32_t> supports;
  const std::uint32_t total = (n == 0) ? 1u : (1u << n);
  for (std::uint32_t mask = 0; mask < total; ++mask) supports.push_back(mask);
  std::sort(supports.begin(), supports.end(), detail::graded_lex_less);

  for (const std::uint32_t mask : supports) {
    const MultiDegree a = MultiDegree::squarefree(n, Face::from_mask(mask));
    const BettiVector h = detail::koszul_strand_any(sc, a, field).homology_dims();
    bool any = false;
    std::vector<long> dims;
    for (int i = h.lo(); i <= h.hi(); ++i) {
      dims.push_back(h.at(i));
      if (h.at(i) != 0) {
        any = true;
        table.beta[static_cast<std::size_t>(i)] += h.at(i);
      }
    }
    if (any) table.per_degree.emplace_back(mask, std::move(dims));
  }
  return table;
}

bool nonsquarefree_vanishing_check(const SimplicialComplex& sc, const FieldSpec& field,
                                   int samples, std::uint64_t seed) {
  const int n = sc.vertex_count();
  if (n == 0) return true;  // no non-squarefree degrees exist
  const std::uint32_t full = (1u << n) - 1;
  std::mt19937_64 rng(seed);
  int done = 0;
  while (done < samples) {
    const std::uint32_t supp = static_cast<std::uint32_t>(rng() & full);
    if (supp == 0) continue;
    const std::uint32_t twos = static_cast<std::uint32_t>(rng() & supp);
    if (twos == 0) continue;
    if (std::popcount(supp) + std::popcount(twos) > n + 2) continue;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      if (twos & (1u << v))
        exps[static_cast<std::size_t>(v)] = 2;
      else if (supp & (1u << v))
        exps[static_cast<std::size_t>(v)] = 1;
    }
    const BettiVector h =
        detail::koszul_strand_any(sc, MultiDegree(std::move(exps)), field).homology_dims();
    if (!h.all_zero()) return false;
    ++done;
  }
  return true;
}

AlgebraicVerdict is_cm_algebraic(const SimplicialComplex& sc, const FieldSpec& field) {
  const BettiTable table = betti_numbers(sc, field);
  AlgebraicVerdict v;
  v.field = field;
  v.projdim = table.projective_dimension();
  v.depth = table.depth();
  v.krull_dim = sc.dim() + 1;
  const long bound = sc.vertex_count() - sc.dim() - 1;  // CM iff β_i = 0 beyond this
  v.is_cm = true;
  for (long i = bound + 1; i < static_cast<long>(table.beta.size()); ++i) {
    if (i >= 0 && table.beta[static_cast<std::size_t>(i)] != 0) {
      v.is_cm = false;
      v.witness_i = i;
      break;
    }
  }
  return v;
}

}  // namespace facering
