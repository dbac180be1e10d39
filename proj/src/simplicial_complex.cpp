#include "facering/simplicial_complex.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace facering {

namespace detail {

bool graded_lex_less(std::uint32_t a, std::uint32_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  // Same cardinality: the face holding the lowest differing vertex has the
  // lexicographically smaller vertex sequence.
  const std::uint32_t d = a ^ b;
  const std::uint32_t low = d & (~d + 1);
  return (a & low) != 0;
}

}  // namespace detail

Face::Face(std::vector<int> vertices) : verts_(std::move(vertices)) {
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (verts_[i] < 0 || verts_[i] > 30)
      throw std::invalid_argument("vertex index out of supported range [0,30]");
    if (i > 0 && verts_[i - 1] >= verts_[i])
      throw std::invalid_argument("face vertices must be strictly increasing");
  }
}

Face Face::from_mask(std::uint32_t mask) {
  Face f;
  for (int v = 0; v < 31; ++v)
    if (mask & (1u << v)) f.verts_.push_back(v);
  return f;
}

std::uint32_t Face::mask() const {
  std::uint32_t m = 0;
  for (int v : verts_) m |= 1u << v;
  return m;
}

bool Face::contains(const Face& other) const {
  const std::uint32_t o = other.mask();
  return (mask() & o) == o;
}

bool Face::disjoint_from(const Face& other) const { return (mask() & other.mask()) == 0; }

Face Face::set_union(const Face& other) const { return from_mask(mask() | other.mask()); }

Face Face::set_minus(const Face& other) const { return from_mask(mask() & ~other.mask()); }

std::string Face::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (i) os << ',';
    os << verts_[i];
  }
  os << '}';
  return os.str();
}

bool operator<(const Face& a, const Face& b) {
  return detail::graded_lex_less(a.mask(), b.mask());
}

long FVector::total() const { return std::accumulate(counts.begin(), counts.end(), 0L); }

std::string FVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) os << ',';
    os << counts[i];
  }
  os << ')';
  return os.str();
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<Face>& facets,
                                                 VertexPolicy policy) {
  if (n < 0 || n > 30) throw std::invalid_argument("ambient vertex count out of range [0,30]");
  SimplicialComplex sc;
  sc.n_ = n;

  std::vector<std::uint32_t> fmasks;
  const std::uint32_t full = (n == 0) ? 0u : ((1u << n) - 1);
  for (const Face& f : facets) {
    const std::uint32_t m = f.mask();
    if ((m & ~full) != 0) throw std::invalid_argument("facet vertex outside ambient range");
    fmasks.push_back(m);
  }
  if (fmasks.empty()) fmasks.push_back(0u);  // {} is always a face

  // Minimalize: drop facets contained in another.
  std::sort(fmasks.begin(), fmasks.end(), detail::graded_lex_less);
  fmasks.erase(std::unique(fmasks.begin(), fmasks.end()), fmasks.end());
  std::vector<std::uint32_t> maximal;
  for (const std::uint32_t m : fmasks) {
    bool contained = false;
    for (const std::uint32_t other : fmasks)
      if (other != m && (m & other) == m) {
        contained = true;
        break;
      }
    if (!contained) maximal.push_back(m);
  }

  std::uint32_t covered = 0;
  for (const std::uint32_t m : maximal) covered |= m;
  if (policy == VertexPolicy::require_coverage && covered != full)
    throw std::invalid_argument("vertex covered by no facet (ghost vertices rejected)");

  sc.facets_.clear();
  for (const std::uint32_t m : maximal) sc.facets_.push_back(Face::from_mask(m));

  // Downward closure.
  sc.face_masks_.clear();
  for (const std::uint32_t m : maximal) {
    std::uint32_t sub = m;
    while (true) {
      sc.face_masks_.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & m;
    }
  }
  std::vector<std::uint32_t> all(sc.face_masks_.begin(), sc.face_masks_.end());
  std::sort(all.begin(), all.end(), detail::graded_lex_less);
  sc.faces_.clear();
  for (const std::uint32_t m : all) sc.faces_.push_back(Face::from_mask(m));
  return sc;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const Face& f : facets_) d = std::max(d, f.dim());
  return d;
}

bool SimplicialComplex::is_pure() const {
  for (const Face& f : facets_)
    if (f.dim() != facets_.front().dim()) return false;
  return true;
}

bool SimplicialComplex::is_facet(const Face& f) const {
  return std::find(facets_.begin(), facets_.end(), f) != facets_.end();
}

FVector SimplicialComplex::f_vector() const {
  FVector fv;
  fv.counts.assign(static_cast<std::size_t>(dim() + 2), 0);
  for (const Face& f : faces_) ++fv.counts[static_cast<std::size_t>(f.dim() + 1)];
  return fv;
}

std::vector<Face> SimplicialComplex::star(const Face& sigma) const {
  if (!contains(sigma)) throw std::invalid_argument("star: face not in the complex");
  const std::uint32_t s = sigma.mask();
  std::vector<Face> out;
  for (const Face& f : faces_)
    if ((f.mask() & s) == s) out.push_back(f);
  return out;
}

Subcomplex SimplicialComplex::relabel_family(
    const std::vector<std::uint32_t>& member_masks) const {
  std::uint32_t used = 0;
  for (const std::uint32_t m : member_masks) used |= m;

  Subcomplex out;
  std::array<int, 31> relabel{};
  relabel.fill(-1);
  for (int v = 0; v < 31; ++v)
    if (used & (1u << v)) {
      relabel[static_cast<std::size_t>(v)] = static_cast<int>(out.ambient_vertices.size());
      out.ambient_vertices.push_back(v);
    }

  // Keep the maximal members as facets.
  std::vector<std::uint32_t> maximal;
  for (const std::uint32_t m : member_masks) {
    bool contained = false;
    for (const std::uint32_t other : member_masks)
      if (other != m && (m & other) == m) {
        contained = true;
        break;
      }
    if (!contained) maximal.push_back(m);
  }

  std::vector<Face> facets;
  for (const std::uint32_t m : maximal) {
    std::vector<int> verts;
    for (int v = 0; v < 31; ++v)
      if (m & (1u << v)) verts.push_back(relabel[static_cast<std::size_t>(v)]);
    facets.emplace_back(std::move(verts));
  }
  out.complex =
      from_facets(static_cast<int>(out.ambient_vertices.size()), facets, VertexPolicy::require_coverage);
  return out;
}

Subcomplex SimplicialComplex::link(const Face& sigma) const {
  if (!contains(sigma)) throw std::invalid_argument("link: face not in the complex");
  const std::uint32_t s = sigma.mask();
  std::vector<std::uint32_t> members;
  for (const Face& f : faces_) {
    const std::uint32_t m = f.mask();
    if ((m & s) == 0 && contains_mask(m | s)) members.push_back(m);
  }
  return relabel_family(members);
}

Subcomplex SimplicialComplex::closed_star(const Face& sigma) const {
  if (!contains(sigma)) throw std::invalid_argument("closed_star: face not in the complex");
  const std::uint32_t s = sigma.mask();
  std::vector<std::uint32_t> members;
  for (const Face& f : faces_)
    if (contains_mask(f.mask() | s)) members.push_back(f.mask());
  return relabel_family(members);
}

std::vector<Face> SimplicialComplex::minimal_nonfaces() const {
  if (n_ > 22) throw std::invalid_argument("minimal_nonfaces: ambient set too large to sweep");
  std::vector<std::uint32_t> mins;
  const std::uint32_t total = (n_ == 0) ? 1u : (1u << n_);
  for (std::uint32_t m = 1; m < total; ++m) {
    if (contains_mask(m)) continue;
    bool minimal = true;
    for (int v = 0; v < n_ && minimal; ++v)
      if ((m & (1u << v)) && !contains_mask(m & ~(1u << v))) minimal = false;
    if (minimal) mins.push_back(m);
  }
  std::sort(mins.begin(), mins.end(), detail::graded_lex_less);
  std::vector<Face> out;
  out.reserve(mins.size());
  for (const std::uint32_t m : mins) out.push_back(Face::from_mask(m));
  return out;
}

SimplicialComplex SimplicialComplex::cone() const {
  std::vector<Face> facets;
  const std::uint32_t apex = 1u << n_;
  for (const Face& f : facets_) facets.push_back(Face::from_mask(f.mask() | apex));
  return from_facets(n_ + 1, facets);
}

std::string SimplicialComplex::to_string() const {
  std::ostringstream os;
  os << "n=" << n_ << " facets=";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) os << ' ';
    os << facets_[i].to_string();
  }
  return os.str();
}

Face Subcomplex::to_ambient(const Face& local) const {
  std::vector<int> verts;
  verts.reserve(local.size());
  for (int v : local.vertices()) verts.push_back(ambient_vertices.at(static_cast<std::size_t>(v)));
  return Face(std::move(verts));
}

std::optional<Face> Subcomplex::from_ambient(const Face& ambient) const {
  std::vector<int> verts;
  verts.reserve(ambient.size());
  for (int v : ambient.vertices()) {
    const auto it = std::find(ambient_vertices.begin(), ambient_vertices.end(), v);
    if (it == ambient_vertices.end()) return std::nullopt;
    verts.push_back(static_cast<int>(it - ambient_vertices.begin()));
  }
  return Face(std::move(verts));
}

}  // namespace facering
