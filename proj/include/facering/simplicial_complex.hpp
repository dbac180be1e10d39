#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace facering {

/// One face: a strictly increasing list of vertex indices. The empty face is
/// a first-class value (dim {} = -1); the augmented chain complex and the
/// face-poset topology both need it.
class Face {
 public:
  Face() = default;
  explicit Face(std::vector<int> vertices);
  static Face from_mask(std::uint32_t mask);

  const std::vector<int>& vertices() const { return verts_; }
  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  std::size_t size() const { return verts_.size(); }
  bool empty() const { return verts_.empty(); }
  std::uint32_t mask() const;
  bool contains(const Face& other) const;
  bool disjoint_from(const Face& other) const;
  Face set_union(const Face& other) const;
  Face set_minus(const Face& other) const;
  std::string to_string() const;

  friend bool operator==(const Face&, const Face&) = default;
  /// Graded lexicographic order: by dimension first, then by vertex sequence.
  friend bool operator<(const Face& a, const Face& b);

 private:
  std::vector<int> verts_;
};

namespace detail {
/// Graded-lex order on faces encoded as bitmasks.
bool graded_lex_less(std::uint32_t a, std::uint32_t b);
}  // namespace detail

/// Face counts f_{-1}, f_0, ..., f_dim.
struct FVector {
  std::vector<long> counts;

  int dim() const { return static_cast<int>(counts.size()) - 2; }
  long f(int i) const {
    const int k = i + 1;
    return (k >= 0 && k < static_cast<int>(counts.size())) ? counts[k] : 0;
  }
  long total() const;
  friend bool operator==(const FVector&, const FVector&) = default;
  std::string to_string() const;
};

struct Subcomplex;

class SimplicialComplex {
 public:
  /// Ghost vertices (v in the ambient set with {v} not a face) are rejected
  /// by default; allow_ghosts exists for ideal-level computations only.
  enum class VertexPolicy { require_coverage, allow_ghosts };

  SimplicialComplex() = default;  // the irrelevant complex {∅} on 0 vertices
  static SimplicialComplex from_facets(int n, const std::vector<Face>& facets,
                                       VertexPolicy policy = VertexPolicy::require_coverage);

  int vertex_count() const { return n_; }
  int dim() const;
  bool is_pure() const;
  const std::vector<Face>& facets() const { return facets_; }
  /// All faces including {}, in graded-lex order.
  const std::vector<Face>& faces() const { return faces_; }
  bool contains(const Face& f) const { return contains_mask(f.mask()); }
  bool contains_mask(std::uint32_t m) const { return face_masks_.count(m) > 0; }
  bool is_facet(const Face& f) const;
  FVector f_vector() const;

  /// st σ = {τ ∈ Σ : σ ⊆ τ}, in ambient labels.
  std::vector<Face> star(const Face& sigma) const;
  /// lk σ = {τ : τ ∩ σ = ∅, σ ∪ τ ∈ Σ}, relabeled onto the vertices that
  /// occur in link faces. The link of a facet is {∅} on no vertices.
  Subcomplex link(const Face& sigma) const;
  /// Least subcomplex containing st σ, relabeled like link().
  Subcomplex closed_star(const Face& sigma) const;

  /// Inclusion-minimal subsets of the ambient vertex set that are not faces;
  /// these generate the Stanley-Reisner ideal.
  std::vector<Face> minimal_nonfaces() const;

  /// Join with one fresh vertex (index n); always acyclic.
  SimplicialComplex cone() const;

  std::string to_string() const;
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  int n_ = 0;
  std::vector<Face> facets_{Face{}};
  std::vector<Face> faces_{Face{}};
  std::unordered_set<std::uint32_t> face_masks_{0u};

  Subcomplex relabel_family(const std::vector<std::uint32_t>& member_masks) const;
};

/// A subcomplex (link or closed star) re-indexed onto its own vertex set.
/// ambient_vertices[i] is the ambient index of local vertex i, so both the
/// masked and the canonical view are available.
struct Subcomplex {
  SimplicialComplex complex;
  std::vector<int> ambient_vertices;

  Face to_ambient(const Face& local) const;
  std::optional<Face> from_ambient(const Face& ambient) const;
};

}  // namespace facering
