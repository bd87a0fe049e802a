#include <doctest.h>

#include <set>

#include "../support/oracles.hpp"
#include "momentangle/models.hpp"
#include "momentangle/random_complex.hpp"

using namespace momentangle;

namespace {

SimplicialComplex two_points() { return SimplicialComplex::from_facets(2, {{1}, {2}}); }

std::set<std::string> labels(const DGAModel& model) {
  std::set<std::string> out;
  const auto& c = model.complex();
  for (int k = c.min_degree(); k <= c.max_degree(); ++k) {
    for (const auto& e : c.basis(k)) out.insert(e.label);
  }
  return out;
}

BasisRef ref_of(const DGAModel& model, const std::string& label) {
  const auto& c = model.complex();
  for (int k = c.min_degree(); k <= c.max_degree(); ++k) {
    if (auto i = c.find(k, label)) return {k, *i};
  }
  FAIL("no basis element " << label);
  return {};
}

// Σ_{σ ∈ Σ} 2^{m - |σ|}: pairs (σ, τ) with τ disjoint from σ.
std::size_t pair_count(const SimplicialComplex& sigma) {
  std::size_t total = 0;
  for (IndexSet f : sigma.faces()) total += std::size_t{1} << (sigma.ground_size() - f.size());
  return total;
}

std::vector<Arena> finite_arenas() {
  return {Arena::complex(), Arena::complex(4), Arena::odd(3), Arena::real()};
}

}  // namespace

TEST_CASE("variant validation") {
  auto sigma = two_points();
  CHECK_THROWS_AS(build_model(sigma, {Family::A, Arena::complex(), std::nullopt}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_model(sigma, {Family::K, Arena::real(), 4}), std::invalid_argument);
  CHECK_THROWS_AS(build_model(sigma, {Family::L, Arena::real_mod2(), std::nullopt}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_model(sigma, {Family::A, Arena::odd(3), 5}), std::invalid_argument);
  CHECK_THROWS_AS(Arena::complex(3), std::invalid_argument);
  CHECK(Arena::disk(1) == Arena::real());
  CHECK(Arena::disk(3) == Arena::odd(3));
  CHECK(Arena::disk(4) == Arena::complex(4));
  // no vertices: the A-model is finite
  CHECK_NOTHROW(build_model(SimplicialComplex::empty(2), {Family::A, Arena::complex(), std::nullopt}));
}

TEST_CASE("B-model of two points") {
  auto model = build_model(two_points(), {Family::B, Arena::complex(), std::nullopt});
  CHECK(labels(model) == std::set<std::string>{"1", "s1", "s2", "t1", "t2", "s1s2", "t1s2",
                                               "s1t2"});
  CHECK(model.complex().rank(0) == 1);
  CHECK(model.complex().rank(1) == 2);
  CHECK(model.complex().rank(2) == 3);
  CHECK(model.complex().rank(3) == 2);
}

TEST_CASE("basis sizes match the pair count") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto sigma = random_complex(5, seed);
    for (Family f : {Family::B, Family::L}) {
      auto model = build_model(sigma, {f, Arena::complex(), std::nullopt});
      CHECK(model.complex().total_rank() == pair_count(sigma));
    }
    std::size_t full = 0;
    for (IndexSet alpha : all_subsets(5)) {
      std::size_t count = 0;
      for (IndexSet f : sigma.faces()) count += f.is_subset_of(alpha);
      full += count;  // hatB(Σ_α) has one word per face of Σ_α
      auto hat = build_hat_model(sigma.restriction(alpha));
      CHECK(hat.complex().total_rank() == count);
    }
    CHECK(full == pair_count(sigma));
  }
}

TEST_CASE("L-model of a vertex") {
  auto model = build_model(SimplicialComplex::simplex(1), {Family::L, Arena::complex(), std::nullopt});
  CHECK(labels(model) == std::set<std::string>{"1", "v1", "u1"});
  auto d = model.differential(ref_of(model, "u1"));
  REQUIRE(d.size() == 1);
  CHECK(d.begin()->first == ref_of(model, "v1"));
  CHECK(d.begin()->second == 1);
}

TEST_CASE("real B-model of a ghost vertex") {
  auto model = build_model(SimplicialComplex::empty(1), {Family::B, Arena::real(), std::nullopt});
  CHECK(labels(model) == std::set<std::string>{"1", "s1"});
  CHECK(model.complex().differential(0).is_zero());
  const auto s = ref_of(model, "s1");
  auto ss = model.product(s, s);
  REQUIRE(ss.size() == 1);
  CHECK(ss.begin()->first == s);
  CHECK(ss.begin()->second == 1);
}

TEST_CASE("real B relations and sign") {
  auto model = build_model(SimplicialComplex::simplex(1), {Family::B, Arena::real(), std::nullopt});
  const auto s = ref_of(model, "s1");
  const auto t = ref_of(model, "t1");
  CHECK(model.product(t, s) == ModelElement{{t, 1}});
  CHECK(model.product(s, t).empty());
  CHECK(model.product(t, t).empty());
  CHECK(model.differential(s) == ModelElement{{t, -1}});
}

TEST_CASE("complex B anticommutes odd letters and kills non-faces") {
  auto model = build_model(two_points(), {Family::B, Arena::complex(), std::nullopt});
  const auto s1 = ref_of(model, "s1");
  const auto s2 = ref_of(model, "s2");
  const auto s1s2 = ref_of(model, "s1s2");
  CHECK(model.product(s1, s2) == ModelElement{{s1s2, 1}});
  CHECK(model.product(s2, s1) == ModelElement{{s1s2, -1}});
  CHECK(model.product(ref_of(model, "t1"), ref_of(model, "t2")).empty());
}

TEST_CASE("coproducts") {
  SUBCASE("complex L: v is primitive") {
    auto model = build_model(SimplicialComplex::simplex(1), {Family::L, Arena::complex(), std::nullopt});
    const auto one = ref_of(model, "1");
    const auto v = ref_of(model, "v1");
    auto terms = model.coproduct(v);
    REQUIRE(terms.size() == 2);
    std::set<std::pair<BasisRef, BasisRef>> got;
    for (const auto& t : terms) {
      CHECK(t.coefficient == 1);
      got.insert({t.left, t.right});
    }
    CHECK(got == std::set<std::pair<BasisRef, BasisRef>>{{v, one}, {one, v}});
  }
  SUBCASE("real L: Δu = u⊗1 + 1⊗u + u⊗v") {
    auto model = build_model(SimplicialComplex::simplex(1), {Family::L, Arena::real(), std::nullopt});
    const auto one = ref_of(model, "1");
    const auto v = ref_of(model, "v1");
    const auto u = ref_of(model, "u1");
    std::set<std::pair<BasisRef, BasisRef>> got;
    for (const auto& t : model.coproduct(u)) {
      CHECK(t.coefficient == 1);
      got.insert({t.left, t.right});
    }
    CHECK(got == std::set<std::pair<BasisRef, BasisRef>>{{u, one}, {one, u}, {u, v}});
  }
  SUBCASE("complex K: Δu_2 = u_2⊗1 + u_1⊗u_1 + 1⊗u_2") {
    auto model = build_model(SimplicialComplex::simplex(1), {Family::K, Arena::complex(), 4});
    const auto one = ref_of(model, "1");
    const auto u1 = ref_of(model, "u1");
    const auto u2 = ref_of(model, "u1^2");
    std::set<std::pair<BasisRef, BasisRef>> got;
    for (const auto& t : model.coproduct(u2)) {
      CHECK(t.coefficient == 1);
      got.insert({t.left, t.right});
    }
    CHECK(got == std::set<std::pair<BasisRef, BasisRef>>{{u2, one}, {u1, u1}, {one, u2}});
  }
}

TEST_CASE("real mod-2 A relation t s = s t + t") {
  auto model = build_model(SimplicialComplex::simplex(1), {Family::A, Arena::real_mod2(), 3});
  const auto s = ref_of(model, "s1");
  const auto t = ref_of(model, "t1");
  const auto st = ref_of(model, "s1t1");
  CHECK(model.product(t, s) == ModelElement{{t, 1}, {st, 1}});
  CHECK(model.product(s, t) == ModelElement{{st, 1}});
  CHECK(model.product(s, s) == ModelElement{{s, 1}});
}

TEST_CASE("Leibniz and co-Leibniz on random complexes") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto sigma = random_complex(4, seed);
    for (const auto& arena : finite_arenas()) {
      CHECK(leibniz_violations(build_model(sigma, {Family::B, arena, std::nullopt})).empty());
      CHECK(coleibniz_violations(build_model(sigma, {Family::L, arena, std::nullopt})).empty());
    }
    CHECK(leibniz_violations(build_model(sigma, {Family::B, Arena::real_mod2(), std::nullopt})).empty());
    CHECK(leibniz_violations(build_model(sigma, {Family::A, Arena::complex(), 7})).empty());
    CHECK(leibniz_violations(build_model(sigma, {Family::A, Arena::real_mod2(), 4})).empty());
    CHECK(coleibniz_violations(build_model(sigma, {Family::K, Arena::complex(), 7})).empty());
    CHECK(leibniz_violations(build_hat_model(sigma)).empty());
  }
}

TEST_CASE("B is dual to L") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto sigma = random_complex(4, seed);
    for (const auto& arena : finite_arenas()) {
      auto v = duality_violations(sigma, arena);
      CHECK_MESSAGE(v.empty(), arena.name() << ": " << (v.empty() ? "" : v.front()));
    }
  }
}

TEST_CASE("L includes into K") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto sigma = random_complex(4, seed);
    auto l = build_model(sigma, {Family::L, Arena::complex(), std::nullopt});
    auto k = build_model(sigma, {Family::K, Arena::complex(), 9});
    CHECK(inclusion_violations(l, k).empty());
  }
}

TEST_CASE("tensor factorization") {
  auto a = tensor_factorization(2, IndexSet{1}, Family::L, Arena::complex());
  CHECK(a.degrees_match);
  CHECK(a.differentials_match);
  std::size_t total = 0;
  for (auto r : a.model_ranks) total += r;
  CHECK(total == 6);
  auto b = tensor_factorization(1, IndexSet{1}, Family::L, Arena::complex());
  CHECK(b.degrees_match);
  CHECK(b.product_ranks == b.model_ranks);
  auto c = tensor_factorization(3, IndexSet{1, 2, 3}, Family::L, Arena::complex());
  total = 0;
  for (auto r : c.model_ranks) total += r;
  CHECK(total == 27);
  CHECK(c.differentials_match);
  for (const auto& arena : finite_arenas()) {
    for (Family f : {Family::B, Family::L}) {
      auto t = tensor_factorization(4, IndexSet{1, 3}, f, arena);
      CHECK(t.degrees_match);
      CHECK(t.differentials_match);
    }
  }
  auto k = tensor_factorization(3, IndexSet{2, 3}, Family::K, Arena::complex(), 6);
  CHECK(k.degrees_match);
  CHECK(k.differentials_match);
  auto am = tensor_factorization(3, IndexSet{1, 2}, Family::A, Arena::real_mod2(), 3);
  CHECK(am.degrees_match);
  CHECK(am.differentials_match);
}

TEST_CASE("Mayer–Vietoris sequences") {
  SUBCASE("two vertices") {
    auto s1 = SimplicialComplex::from_facets(2, {{1}});
    auto s2 = SimplicialComplex::from_facets(2, {{2}});
    auto mv = mv_short_exact_sequences(s1, s2, Family::L, Arena::complex());
    CHECK(mv.intersection.sigma() == SimplicialComplex::empty(2));
    CHECK(mv.union_model.sigma() == two_points());
    for (const auto& [k, inc] : mv.inclusion) {
      CHECK(inc.rows() == mv.first.complex().rank(k) + mv.second.complex().rank(k));
    }
    CHECK(mv_exactness_violations(mv).empty());
  }
  SUBCASE("equal halves") {
    auto s = SimplicialComplex::simplex_boundary(3);
    auto mv = mv_short_exact_sequences(s, s, Family::L, Arena::real());
    CHECK(mv.intersection.sigma() == s);
    CHECK(mv.union_model.sigma() == s);
    CHECK(mv_exactness_violations(mv).empty());
  }
  SUBCASE("random splits") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto sigma = random_complex(4, seed);
      auto facets = sigma.facets();
      if (facets.size() < 2) continue;
      auto rest = std::vector<IndexSet>(facets.begin() + 1, facets.end());
      auto s1 = SimplicialComplex::from_facets(4, rest);
      auto s2 = SimplicialComplex::from_facets(4, {facets.front()});
      CHECK(mv_exactness_violations(mv_short_exact_sequences(s1, s2, Family::L, Arena::complex())).empty());
      CHECK(mv_exactness_violations(mv_short_exact_sequences(s1, s2, Family::K, Arena::complex(), 6)).empty());
    }
  }
}

TEST_CASE("Hochster components") {
  auto model = build_model(two_points(), {Family::B, Arena::complex(), std::nullopt});
  auto comps = hochster_components(model);
  auto labels_of = [](const BasedComplex& c) {
    std::set<std::string> out;
    for (int k = c.min_degree(); k <= c.max_degree(); ++k) {
      for (const auto& e : c.basis(k)) out.insert(e.label);
    }
    return out;
  };
  CHECK(labels_of(comps.at(IndexSet{1, 2})) == std::set<std::string>{"s1s2", "t1s2", "s1t2"});
  CHECK(labels_of(comps.at(IndexSet{})) == std::set<std::string>{"1"});
  CHECK(labels_of(comps.at(IndexSet{1})) == std::set<std::string>{"s1", "t1"});
  for (int k = 0; k <= 3; ++k) CHECK(homology(comps.at(IndexSet{1}), k).is_zero());
  CHECK_THROWS_AS(hochster_components(build_model(two_points(), {Family::K, Arena::complex(), 3})),
                  std::invalid_argument);
}

TEST_CASE("components are sign-twisted copies of hatB") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto sigma = random_complex(4, seed);
    for (const auto& arena : finite_arenas()) {
      for (Family f : {Family::B, Family::L}) {
        auto model = build_model(sigma, {f, arena, std::nullopt});
        for (IndexSet alpha : all_subsets(4)) {
          auto hat = build_hat_model(sigma.restriction(alpha));
          CHECK_NOTHROW(component_isomorphism(model, hat, alpha));
        }
      }
    }
  }
}

TEST_CASE("polynomial and exterior models have the same homology") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto sigma = random_complex(3, seed);
    const int cap = 2 * 3 + 1;
    auto a = build_model(sigma, {Family::A, Arena::complex(), cap});
    auto b = build_model(sigma, {Family::B, Arena::complex(), std::nullopt});
    auto k = build_model(sigma, {Family::K, Arena::complex(), cap});
    auto l = build_model(sigma, {Family::L, Arena::complex(), std::nullopt});
    for (int d = 0; d <= a.complex().trusted_max(); ++d) {
      CHECK(homology(a.complex(), d) == homology(b.complex(), d));
      CHECK(homology(k.complex(), d) == homology(l.complex(), d));
    }
    auto am = build_model(sigma, {Family::A, Arena::real_mod2(), 4});
    auto bm = build_model(sigma, {Family::B, Arena::real_mod2(), std::nullopt});
    for (int d = 0; d <= am.complex().trusted_max(); ++d) {
      const auto two = CoefficientRing::prime_field(2);
      CHECK(homology(am.complex(), d, two) == homology(bm.complex(), d, two));
    }
  }
}
