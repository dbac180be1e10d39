#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "facering/generators.hpp"
#include "facering/simplicial_complex.hpp"
#include "oracles.hpp"

using namespace facering;

namespace {

SimplicialComplex make(int n, const std::vector<std::vector<int>>& facets,
                       SimplicialComplex::VertexPolicy policy =
                           SimplicialComplex::VertexPolicy::require_coverage) {
  std::vector<Face> fs;
  for (const auto& f : facets) fs.emplace_back(f);
  return SimplicialComplex::from_facets(n, fs, policy);
}

}  // namespace

TEST_CASE("face construction and ordering") {
  CHECK(Face({0, 2, 5}).dim() == 2);
  CHECK(Face{}.dim() == -1);
  CHECK(Face({0, 2, 5}).mask() == 0b100101u);
  CHECK(Face::from_mask(0b100101u) == Face({0, 2, 5}));
  CHECK_THROWS_AS(Face({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Face({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Face({-1}), std::invalid_argument);

  // Graded-lex: dimension first, then vertex sequence.
  CHECK(Face({2}) < Face({0, 1}));
  CHECK(Face({0, 3}) < Face({1, 2}));
  CHECK(Face({0, 1}) < Face({0, 2}));
  CHECK_FALSE(Face({1, 2}) < Face({0, 3}));
}

TEST_CASE("from_facets examples") {
  const SimplicialComplex full = make(3, {{0, 1, 2}});
  CHECK(full.dim() == 2);
  CHECK(full.faces().size() == 8);
  CHECK(full.is_pure());
  CHECK(full.f_vector() == FVector{{1, 3, 3, 1}});

  const SimplicialComplex edges = make(4, {{0, 1}, {2, 3}});
  CHECK(edges.dim() == 1);
  CHECK(edges.is_pure());

  const SimplicialComplex irrelevant = make(0, {{}});
  CHECK(irrelevant.dim() == -1);
  CHECK(irrelevant.faces().size() == 1);
  CHECK(irrelevant.faces().front().empty());
  CHECK(irrelevant == SimplicialComplex{});

  const SimplicialComplex mixed = make(4, {{0, 1, 2}, {3}});
  CHECK_FALSE(mixed.is_pure());

  // Contained facets are dropped.
  CHECK(make(3, {{0, 1, 2}, {0, 1}}) == make(3, {{0, 1, 2}}));
}

TEST_CASE("from_facets errors") {
  CHECK_THROWS_AS(make(2, {{0, 2}}), std::invalid_argument);        // index out of range
  CHECK_THROWS_AS(make(3, {{0, 1}}), std::invalid_argument);        // vertex 2 uncovered
  CHECK_NOTHROW(make(3, {{0, 1}}, SimplicialComplex::VertexPolicy::allow_ghosts));
}

TEST_CASE("faces are enumerated in graded-lex order") {
  const SimplicialComplex full = make(3, {{0, 1, 2}});
  const std::vector<Face> expected = {Face{},        Face({0}),    Face({1}),    Face({2}),
                                      Face({0, 1}),  Face({0, 2}), Face({1, 2}), Face({0, 1, 2})};
  CHECK(full.faces() == expected);
}

TEST_CASE("link examples") {
  const SimplicialComplex hollow = make(3, {{0, 1}, {1, 2}, {0, 2}});
  const Subcomplex lk0 = hollow.link(Face({0}));
  CHECK(lk0.complex == make(2, {{0}, {1}}));
  CHECK(lk0.ambient_vertices == std::vector<int>{1, 2});

  const SimplicialComplex full = make(3, {{0, 1, 2}});
  const Subcomplex lk01 = full.link(Face({0, 1}));
  CHECK(lk01.complex == make(1, {{0}}));
  CHECK(lk01.ambient_vertices == std::vector<int>{2});

  const SimplicialComplex edges = make(4, {{0, 1}, {2, 3}});
  const Subcomplex lk_empty = edges.link(Face{});
  CHECK(lk_empty.complex == edges);
  CHECK(lk_empty.ambient_vertices == std::vector<int>{0, 1, 2, 3});

  // Link of a facet is {∅}.
  CHECK(edges.link(Face({0, 1})).complex == SimplicialComplex{});

  CHECK_THROWS_AS(edges.link(Face({0, 2})), std::invalid_argument);
}

TEST_CASE("star and closed star") {
  const SimplicialComplex hollow = make(3, {{0, 1}, {1, 2}, {0, 2}});
  const std::vector<Face> st0 = hollow.star(Face({0}));
  CHECK(st0 == std::vector<Face>{Face({0}), Face({0, 1}), Face({0, 2})});

  const Subcomplex closed0 = hollow.closed_star(Face({0}));
  CHECK(closed0.complex == make(3, {{0, 1}, {0, 2}}));
  CHECK(closed0.ambient_vertices == std::vector<int>{0, 1, 2});

  const SimplicialComplex edges = make(4, {{0, 1}, {2, 3}});
  CHECK(edges.closed_star(Face{}).complex == edges);
  CHECK(edges.closed_star(Face({0, 1})).complex == make(2, {{0, 1}}));

  // st σ sits inside the closed star, and the closed star is no bigger than
  // the downward closure of the star.
  for (const Face& f : st0) {
    const auto local = closed0.from_ambient(f);
    REQUIRE(local.has_value());
    CHECK(closed0.complex.contains(*local));
  }
  for (const Face& f : closed0.complex.faces()) {
    const Face ambient = closed0.to_ambient(f);
    bool inside_some_star_face = false;
    for (const Face& s : st0) inside_some_star_face = inside_some_star_face || s.contains(ambient);
    CHECK(inside_some_star_face);
  }
}

TEST_CASE("minimal nonfaces") {
  CHECK(make(4, {{0, 1}, {2, 3}}).minimal_nonfaces() ==
        std::vector<Face>{Face({0, 2}), Face({0, 3}), Face({1, 2}), Face({1, 3})});
  CHECK(make(3, {{0, 1}, {1, 2}, {0, 2}}).minimal_nonfaces() ==
        std::vector<Face>{Face({0, 1, 2})});
  CHECK(make(4, {{0, 1, 2, 3}}).minimal_nonfaces().empty());
  // Ghost vertex shows up as a degree-one non-face.
  const auto ghost = make(2, {{0}}, SimplicialComplex::VertexPolicy::allow_ghosts);
  CHECK(ghost.minimal_nonfaces() == std::vector<Face>{Face({1})});
}

TEST_CASE("exhaustive enumeration counts and determinism") {
  CHECK(enumerate_all_complexes(0).size() == 1);
  CHECK(enumerate_all_complexes(1).size() == 1);

  const auto two = enumerate_all_complexes(2);
  REQUIRE(two.size() == 2);
  CHECK(std::count(two.begin(), two.end(), make(2, {{0}, {1}})) == 1);
  CHECK(std::count(two.begin(), two.end(), make(2, {{0, 1}})) == 1);

  // Counts frozen from the brute-force oracle over subset families.
  const auto three = enumerate_all_complexes(3);
  CHECK(three.size() == 9);
  CHECK(static_cast<long>(three.size()) == orc::count_covering_antichains(3));

  const auto four = enumerate_all_complexes(4);
  CHECK(four.size() == 114);
  CHECK(static_cast<long>(four.size()) == orc::count_covering_antichains(4));

  // Duplicate-free.
  for (const auto& complexes : {three, four}) {
    std::set<std::string> seen;
    for (const auto& sc : complexes) seen.insert(sc.to_string());
    CHECK(seen.size() == complexes.size());
  }

  CHECK(enumerate_all_complexes(3) == three);
  CHECK_THROWS_AS(enumerate_all_complexes(6), std::invalid_argument);

  long n5 = 0;
  for_each_complex(5, [&](const SimplicialComplex&) { ++n5; });
  CHECK(n5 == 6894);  // frozen regression value
}

TEST_CASE("random complexes are valid and seed-deterministic") {
  for (const std::uint64_t seed : {1ull, 7ull, 42ull}) {
    const SimplicialComplex sc = random_complex(6, 0.3, seed);
    CHECK(sc == random_complex(6, 0.3, seed));
    CHECK(sc.vertex_count() == 6);
    // Downward closure and coverage.
    for (const Face& f : sc.faces())
      for (const int v : f.vertices()) CHECK(sc.contains(Face::from_mask(f.mask() & ~(1u << v))));
    for (int v = 0; v < 6; ++v) CHECK(sc.contains(Face({v})));
  }
  CHECK(random_complex(5, 0.0, 3) == make(5, {{0}, {1}, {2}, {3}, {4}}));
  CHECK(random_complex(4, 1.0, 3) == make(4, {{0, 1, 2, 3}}));
  CHECK_THROWS_AS(random_complex(4, 1.5, 3), std::invalid_argument);
}

TEST_CASE("downward closure and link-of-link over small corpora") {
  for (int n = 1; n <= 3; ++n) {
    for (const SimplicialComplex& sc : enumerate_all_complexes(n)) {
      for (const Face& f : sc.faces()) {
        std::uint32_t sub = f.mask();
        while (true) {
          CHECK(sc.contains_mask(sub));
          if (sub == 0) break;
          sub = (sub - 1) & f.mask();
        }
      }
      // lk_{lk σ} τ = lk(σ ∪ τ) as ambient face sets, for disjoint σ, τ with
      // σ ∪ τ a face.
      for (const Face& sigma : sc.faces()) {
        const Subcomplex lk1 = sc.link(sigma);
        for (const Face& tau_amb : sc.faces()) {
          if (!tau_amb.disjoint_from(sigma) || !sc.contains(sigma.set_union(tau_amb))) continue;
          const auto tau_local = lk1.from_ambient(tau_amb);
          REQUIRE(tau_local.has_value());
          const Subcomplex lk2 = lk1.complex.link(*tau_local);
          const Subcomplex direct = sc.link(sigma.set_union(tau_amb));
          std::set<std::uint32_t> via_two, via_one;
          for (const Face& f : lk2.complex.faces())
            via_two.insert(lk1.to_ambient(lk2.to_ambient(f)).mask());
          for (const Face& f : direct.complex.faces()) via_one.insert(direct.to_ambient(f).mask());
          CHECK(via_two == via_one);
        }
      }
    }
  }
}

TEST_CASE("f-vector of the full simplex is binomial") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    const SimplicialComplex full = SimplicialComplex::from_facets(n, {Face(all)});
    long expected = 1;
    for (int i = -1; i < n; ++i) {
      CHECK(full.f_vector().f(i) == expected);  // C(n, i+1)
      expected = expected * (n - i - 1) / (i + 2);
    }
  }
}

TEST_CASE("cone over a complex") {
  const SimplicialComplex edges = make(4, {{0, 1}, {2, 3}});
  const SimplicialComplex cone = edges.cone();
  CHECK(cone.vertex_count() == 5);
  CHECK(cone.facets() == std::vector<Face>{Face({0, 1, 4}), Face({2, 3, 4})});
  CHECK(SimplicialComplex{}.cone() == make(1, {{0}}));
}
