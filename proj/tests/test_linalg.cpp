#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "facering/homology.hpp"
#include "facering/matrix.hpp"
#include "oracles.hpp"

using namespace facering;

namespace {

// Tiny LCG so the sampled matrices are identical on every platform.
struct Lcg {
  std::uint64_t s;
  long long next(long long span) {  // values in [-span, span]
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long long>((s >> 33) % (2 * span + 1)) - span;
  }
};

ExactMatrix sample(FieldSpec field, std::size_t rows, std::size_t cols, Lcg& rng, orc::Mat* mirror) {
  ExactMatrix m(field, rows, cols);
  if (mirror) mirror->assign(rows, std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const long long v = rng.next(4);
      m.set(i, j, v);
      if (mirror) (*mirror)[i][j] = v;
    }
  return m;
}

}  // namespace

TEST_CASE("field spec") {
  CHECK(FieldSpec::rationals().name() == "Q");
  CHECK(FieldSpec::prime(2).name() == "GF(2)");
  CHECK(FieldSpec::prime(7919).p() == 7919);
  CHECK_THROWS_AS(FieldSpec::prime(4), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::prime(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::prime(1ull << 40), std::invalid_argument);
}

TEST_CASE("rank examples") {
  CHECK(ExactMatrix(FieldSpec::rationals(), 0, 5).rank() == 0);
  CHECK(ExactMatrix::identity(FieldSpec::prime(2), 3).rank() == 3);

  ExactMatrix m(FieldSpec::rationals(), 2, 2);
  m.set(0, 0, 2);
  m.set(0, 1, 4);
  m.set(1, 0, 1);
  m.set(1, 1, 2);
  CHECK(m.rank() == 1);
  CHECK(m.kernel_dim() == 1);
}

TEST_CASE("multiply, is_zero, kernel") {
  Lcg rng{99};
  const ExactMatrix a = sample(FieldSpec::rationals(), 3, 4, rng, nullptr);
  CHECK(a.multiply(ExactMatrix::identity(FieldSpec::rationals(), 4)) == a);

  ExactMatrix row(FieldSpec::prime(2), 1, 2);
  row.set(0, 0, 1);
  row.set(0, 1, 1);
  CHECK(row.kernel_dim() == 1);

  // Boundary composite of the full triangle's chain complex.
  const SimplicialComplex full =
      SimplicialComplex::from_facets(3, {Face({0, 1, 2})});
  const FiniteChainComplex chain = augmented_chain_complex(full, FieldSpec::rationals());
  for (std::size_t j = 0; j + 1 < chain.differential_count(); ++j)
    CHECK(chain.differential(j).multiply(chain.differential(j + 1)).is_zero());

  CHECK_THROWS_AS(a.multiply(a), std::invalid_argument);  // 3x4 times 3x4
  ExactMatrix gf(FieldSpec::prime(3), 4, 2);
  CHECK_THROWS_AS(a.multiply(gf), std::invalid_argument);  // field mismatch
}

TEST_CASE("GF(p) entries are reduced") {
  ExactMatrix m(FieldSpec::prime(5), 1, 2);
  m.set(0, 0, -1);
  m.add(0, 1, 13);
  CHECK(m.residue_at(0, 0) == 4);
  CHECK(m.residue_at(0, 1) == 3);
}

TEST_CASE("rank agrees with the oracle on sampled matrices") {
  Lcg rng{20260809};
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + static_cast<std::size_t>((rng.next(3) + 3) % 6);
    const std::size_t cols = 1 + static_cast<std::size_t>((rng.next(3) + 3) % 6);
    orc::Mat mirror;
    const ExactMatrix q = sample(FieldSpec::rationals(), rows, cols, rng, &mirror);
    CHECK(q.rank() == orc::rank(mirror, 0));
    CHECK(q.rank() == q.transpose().rank());
    CHECK(q.kernel_dim() + q.rank() == cols);

    for (const long long p : {2, 3, 5}) {
      ExactMatrix mp(FieldSpec::prime(static_cast<std::uint64_t>(p)), rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) mp.set(i, j, mirror[i][j]);
      CHECK(mp.rank() == orc::rank(mirror, p));
      CHECK(mp.rank() == mp.transpose().rank());
      // Reduction can only lose rank.
      CHECK(q.rank() >= mp.rank());
    }
  }
}

TEST_CASE("rational entries and the big-integer fallback") {
  // Hilbert-style matrix: dense denominators, full rank.
  ExactMatrix h(FieldSpec::rationals(), 6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      h.set(i, j, Rational(1, static_cast<long>(i + j + 1)));
  CHECK(h.rank() == 6);

  // Entries whose Bareiss minors overflow int64.
  ExactMatrix big(FieldSpec::rationals(), 2, 2);
  const long long huge = 1ll << 40;
  big.set(0, 0, huge);
  big.set(0, 1, 1);
  big.set(1, 0, 1);
  big.set(1, 1, huge);
  CHECK(big.rank() == 2);

  ExactMatrix singular(FieldSpec::rationals(), 2, 2);
  singular.set(0, 0, huge);
  singular.set(0, 1, huge);
  singular.set(1, 0, huge);
  singular.set(1, 1, huge);
  CHECK(singular.rank() == 1);
}
