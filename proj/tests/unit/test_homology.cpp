#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "momentangle/cochains.hpp"
#include "momentangle/homology.hpp"
#include "momentangle/random_complex.hpp"
#include "momentangle/smith.hpp"

using namespace momentangle;

namespace {

bool is_diagonal_chain(const IntMatrix& s) {
  Integer previous = 1;
  bool zero_seen = false;
  for (std::size_t j = 0; j < s.cols(); ++j) {
    for (const auto& [i, v] : s.column(j)) {
      if (i != j) return false;
    }
    const Integer d = j < s.rows() ? s.at(j, j) : Integer(0);
    if (d == 0) {
      zero_seen = true;
      continue;
    }
    if (zero_seen || d < 0) return false;
    if (!mpz_divisible_p(d.get_mpz_t(), previous.get_mpz_t())) return false;
    previous = d;
  }
  return true;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (rng() % 3 == 0) continue;
      m.add_to(i, j, Integer(static_cast<long>(rng() % (2 * range + 1)) - range));
    }
  }
  return m;
}

BasedComplex chain_of(IntMatrix d, int low) {
  // d: C_{low+1} -> C_low
  std::vector<std::vector<BasisElement>> bases(2);
  for (std::size_t i = 0; i < d.rows(); ++i) bases[0].push_back({"a" + std::to_string(i), {}});
  for (std::size_t i = 0; i < d.cols(); ++i) bases[1].push_back({"b" + std::to_string(i), {}});
  BasedComplex c(BasedComplex::kChain, low, bases);
  c.set_differential(low + 1, std::move(d));
  return c;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto id = smith_normal_form(IntMatrix::identity(3));
  CHECK(id.diagonal == IntMatrix::identity(3));
  auto zero = smith_normal_form(IntMatrix(2, 3));
  CHECK(zero.diagonal.is_zero());
  CHECK(zero.rank == 0);
  auto s = smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}}));
  CHECK(s.diagonal == IntMatrix::from_rows({{2, 0}, {0, 4}}));
  CHECK(s.invariant_factors == std::vector<Integer>{2, 4});
}

TEST_CASE("smith normal form agrees with determinantal divisors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, rows, cols, 6);
    const auto form = smith_normal_form(m);
    CHECK(form.left * m * form.right == form.diagonal);
    CHECK(is_diagonal_chain(form.diagonal));
    const Integer du = determinant(form.left);
    const Integer dv = determinant(form.right);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    CHECK(form.invariant_factors == oracle::invariant_factors(oracle::to_rows(m)));
    CHECK(form.rank == oracle::rational_rank(oracle::to_rows(m)));
    CHECK(rank_over(m, CoefficientRing::prime_field(3)) ==
          oracle::modular_rank(oracle::to_rows(m), 3));
  }
}

TEST_CASE("determinant matches permutation expansion") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, n, n, 9);
    CHECK(determinant(m) == oracle::small_determinant(oracle::to_rows(m)));
  }
}

TEST_CASE("solve_with_image") {
  auto x = solve_with_image(IntMatrix::from_rows({{2}}), {4});
  REQUIRE(x);
  CHECK(*x == IntVector{2});
  CHECK_FALSE(solve_with_image(IntMatrix::from_rows({{2}}), {3}));
  auto y = solve_with_image(IntMatrix::from_rows({{1, 1}, {0, 2}}), {1, 2});
  REQUIRE(y);
  CHECK(*y == IntVector{0, 1});

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 5);
    IntVector x0(a.cols());
    for (auto& v : x0) v = static_cast<long>(rng() % 7) - 3;
    const IntVector b = a.apply(x0);
    auto sol = solve_with_image(a, b);
    REQUIRE(sol);
    CHECK(a.apply(*sol) == b);
  }
}

TEST_CASE("homology of a two-term complex") {
  // Z --2--> Z in degrees 1 -> 0
  auto c = chain_of(IntMatrix::from_rows({{2}}), 0);
  auto h0 = homology(c, 0);
  CHECK(h0.free_rank == 0);
  CHECK(h0.torsion == std::vector<Integer>{2});
  CHECK(homology(c, 1).is_zero());
  CHECK(homology(c, 0, CoefficientRing::rationals()).is_zero());
  CHECK(homology(c, 0, CoefficientRing::prime_field(2)).free_rank == 1);
  CHECK(homology(c, 1, CoefficientRing::prime_field(2)).free_rank == 1);
}

TEST_CASE("homology of the triangle boundary") {
  auto c = augmented_cochain_complex(SimplicialComplex::simplex_boundary(3));
  CHECK(homology(c, 1).free_rank == 1);
  CHECK(homology(c, 0).is_zero());
}

TEST_CASE("dualize") {
  auto c = chain_of(IntMatrix::from_rows({{1}}), 0);
  auto d = dualize(c);
  CHECK(d.direction() == BasedComplex::kCochain);
  CHECK(d.differential(0) == IntMatrix::from_rows({{-1}}));
  auto z = dualize(chain_of(IntMatrix(2, 3), 0));
  CHECK(z.differential(0).is_zero());
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    auto original = chain_of(random_matrix(rng, 3, 4, 3), static_cast<int>(rng() % 5) - 2);
    auto twice = dualize(dualize(original));
    for (int k = original.min_degree(); k <= original.max_degree(); ++k) {
      CHECK(twice.differential(k) == original.differential(k));
    }
  }
}

TEST_CASE("d∘d is checked") {
  std::vector<std::vector<BasisElement>> bases(3, std::vector<BasisElement>{{"x", {}}});
  BasedComplex c(BasedComplex::kCochain, 0, bases);
  c.set_differential(0, IntMatrix::from_rows({{1}}));
  c.set_differential(1, IntMatrix::from_rows({{1}}));
  CHECK_THROWS_AS(c.check(), std::logic_error);
  c.set_differential(1, IntMatrix::from_rows({{2}}));
  CHECK_THROWS_AS(c.check(), std::logic_error);
  CHECK_NOTHROW(c.check(CoefficientRing::prime_field(2)));
}

TEST_CASE("truncated complexes refuse the cut-off degree") {
  std::vector<std::vector<BasisElement>> bases(3, std::vector<BasisElement>{{"x", {}}});
  BasedComplex c(BasedComplex::kCochain, 0, bases, 2);
  CHECK(c.trusted_max() == 1);
  CHECK_NOTHROW(homology(c, 1));
  CHECK_THROWS_AS(homology(c, 2), TruncationError);
}

TEST_CASE("engine agrees with the oracle and universal coefficients") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto sigma = random_complex(5, seed);
    for (const auto& c :
         {augmented_cochain_complex(sigma), relative_cochain_complex(cone(sigma))}) {
      HomologyEngine z(c, CoefficientRing::integers());
      for (int k = c.min_degree(); k <= c.max_degree(); ++k) {
        const auto& g = z.group(k);
        auto want = oracle::homology_shape(c, k);
        CHECK(g.free_rank == want.free_rank);
        CHECK(g.torsion == want.torsion);
        for (std::int64_t p : {2, 3, 5}) {
          const auto field = CoefficientRing::prime_field(p);
          const std::size_t predicted = universal_coefficient_rank(
              g, homology(c, k + c.direction()), p);
          CHECK(homology(c, k, field).free_rank == predicted);
          CHECK(field_betti_number(c, k, field) == predicted);
        }
        CHECK(homology(c, k, CoefficientRing::rationals()).free_rank == g.free_rank);
        CHECK(field_betti_number(c, k, CoefficientRing::rationals()) == g.free_rank);
      }
    }
  }
}

TEST_CASE("generators and coordinates") {
  // Chain complex with H_0 = Z/2 + Z/3 + Z (direct sum of blocks).
  auto c = chain_of(IntMatrix::from_rows({{2, 0}, {0, 3}, {0, 0}}), 0);
  HomologyEngine engine(c, CoefficientRing::integers());
  const auto& g = engine.group(0);
  CHECK(g.free_rank == 1);
  CHECK(g.torsion == std::vector<Integer>{6});
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    IntVector e(g.generators.size(), Integer(0));
    e[i] = 1;
    CHECK(engine.coordinates(0, g.generators[i].representative) == e);
  }
  // A boundary has zero coordinates.
  IntVector boundary{2, 3, 0};
  CHECK(engine.is_boundary(0, boundary));
  CHECK(engine.coordinates(0, boundary) == IntVector(g.generators.size(), Integer(0)));
  CHECK_FALSE(engine.is_boundary(0, {1, 0, 0}));
}

TEST_CASE("tensor products satisfy the Künneth formula over fields") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto a = relative_cochain_complex(dual_blocks_pair(random_complex(4, seed), IndexSet{1, 3}));
    auto b = augmented_cochain_complex(random_complex(3, seed + 100));
    auto t = tensor_product(a, b);
    CHECK_NOTHROW(t.check(CoefficientRing::integers()));
    for (auto field : {CoefficientRing::rationals(), CoefficientRing::prime_field(2)}) {
      for (int k = t.min_degree(); k <= t.max_degree(); ++k) {
        std::size_t expected = 0;
        for (int p = a.min_degree(); p <= a.max_degree(); ++p) {
          if (!b.in_range(k - p)) continue;
          expected += field_betti_number(a, p, field) * field_betti_number(b, k - p, field);
        }
        CHECK(field_betti_number(t, k, field) == expected);
      }
    }
  }
}
