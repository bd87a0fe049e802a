// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "momentangle/hochster.hpp"
#include "momentangle/polytope.hpp"
#include "momentangle/random_complex.hpp"
#include "momentangle/ring.hpp"

using namespace momentangle;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

SimplicialComplex cycle(int m) {
  std::vector<IndexSet> edges;
  for (int i = 1; i <= m; ++i) edges.push_back({i, i % m + 1});
  return SimplicialComplex::from_facets(m, edges);
}

SimplicialComplex two_points() { return SimplicialComplex::from_facets(2, {{1}, {2}}); }

SimplicialComplex rp2() {
  return SimplicialComplex::from_facet_lists(
      6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}});
}

const std::vector<SimplicialComplex>& random_corpus() {
  static const std::vector<SimplicialComplex> corpus = [] {
    std::vector<SimplicialComplex> out;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      out.push_back(random_complex(3 + static_cast<int>(seed % 3), 1000 + seed));
    }
    return out;
  }();
  return corpus;
}

std::vector<SimplicialComplex> named_corpus() {
  return {two_points(), SimplicialComplex::simplex_boundary(3), cycle(4), cycle(5),
          SimplicialComplex::simplex_boundary(4), SimplicialComplex::empty(3), SimplicialComplex::simplex(3)};
}

std::string str(const CohomologyGroup& g) {
  std::string out = "Z^" + std::to_string(g.free_rank);
  for (const auto& t : g.torsion) out += "+Z/" + t.get_str();
  return out;
}

bool is_z(const CohomologyGroup& g) { return g.free_rank == 1 && g.torsion.empty(); }

// Ring of the B-model equals ℤ in degrees 0 and top, and matches the
// assembled topological Hochster table in every degree.
void check_sphere(Outcome& o, const SimplicialComplex& sigma, const Arena& arena, int top,
                  const std::string& tag) {
  const auto model = build_model(sigma, {Family::B, arena, std::nullopt});
  const auto ring = cohomology_ring(model, model.complex().max_degree(), CoefficientRing::integers());
  const auto oracle = assemble_poincare(arena, hochster_table_topological(sigma));
  for (int k = 0; k <= ring.max_degree; ++k) {
    const auto g = ring.group(k);
    const bool expected = (k == 0 || k == top) ? is_z(g) : g.is_zero();
    if (!expected) o.fail(tag + ": H^" + std::to_string(k) + " = " + str(g));
    const auto it = oracle.find(k);
    const CohomologyGroup h = it == oracle.end() ? CohomologyGroup{} : it->second;
    if (!(g == h)) o.fail(tag + ": ring and Hochster oracle differ in degree " + std::to_string(k));
  }
  if (top > ring.max_degree) o.fail(tag + ": top degree missing");
}

Outcome sphere_complex() {
  Outcome o;
  for (int m = 2; m <= 4; ++m) {
    check_sphere(o, SimplicialComplex::simplex_boundary(m), Arena::complex(), 2 * m - 1, "m=" + std::to_string(m));
  }
  if (o.passed) o.detail = "Z in degrees 0 and 2m-1 for m = 2, 3, 4";
  return o;
}

Outcome sphere_real() {
  Outcome o;
  for (int m = 2; m <= 4; ++m) {
    check_sphere(o, SimplicialComplex::simplex_boundary(m), Arena::real(), m - 1, "m=" + std::to_string(m));
  }
  if (o.passed) o.detail = "Z in degrees 0 and m-1 for m = 2, 3, 4";
  return o;
}

Outcome generalized_disks() {
  Outcome o;
  for (int n : {3, 4}) {
    check_sphere(o, two_points(), Arena::disk(n), 2 * n - 1, "n=" + std::to_string(n));
  }
  if (o.passed) o.detail = "Z in degrees 0 and 2n-1 for n = 3, 4";
  return o;
}

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Outcome torus_rings() {
  Outcome o;
  for (int m = 1; m <= 4; ++m) {
    const std::string tag = "m=" + std::to_string(m);
    const auto sigma = SimplicialComplex::empty(m);
    const auto complex_model = build_model(sigma, {Family::B, Arena::complex(), std::nullopt});
    const auto ring = cohomology_ring(complex_model, m, CoefficientRing::integers());
    for (int k = 0; k <= m; ++k) {
      const auto g = ring.group(k);
      if (g.free_rank != binomial(m, k) || !g.torsion.empty()) o.fail(tag + ": rank of H^" + std::to_string(k));
    }
    IntVector x = ring.basis_vector(ring.indices(0).front());
    for (std::size_t i : ring.indices(1)) x = ring.multiply(x, ring.basis_vector(i));
    const auto top = ring.indices(m);
    std::size_t nonzero = 0;
    bool unit = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      ++nonzero;
      unit = top.size() == 1 && i == top.front() && abs(x[i]) == 1;
    }
    if (nonzero != 1 || !unit) o.fail(tag + ": product of the degree-1 generators is not a top generator");

    const auto real_model = build_model(sigma, {Family::B, Arena::real(), std::nullopt});
    const auto real_ring = cohomology_ring(real_model, 0, CoefficientRing::integers());
    if (real_ring.free_rank(0) != (std::size_t{1} << m)) o.fail(tag + ": real H^0 rank");
    const auto mod2 = build_model(sigma, {Family::B, Arena::real(), std::nullopt});
    const auto mod2_ring = cohomology_ring(mod2, 0, CoefficientRing::prime_field(2));
    const std::size_t all = std::size_t{1} << mod2_ring.size();
    if (mod2_ring.size() != (std::size_t{1} << m) || count_idempotents(mod2_ring) != all) {
      o.fail(tag + ": not every class of H^0(;Z/2) squares to itself");
    }
  }
  if (o.passed) o.detail = "exterior algebras and Boolean H^0 for m = 1..4 (all 2^16 classes at m = 4)";
  return o;
}

const std::vector<CoefficientRing>& three_rings() {
  static const std::vector<CoefficientRing> rings{CoefficientRing::integers(), CoefficientRing::prime_field(2),
                                                   CoefficientRing::prime_field(3)};
  return rings;
}

Outcome quasi_isomorphisms() {
  Outcome o;
  std::size_t comparisons = 0;
  for (std::size_t c = 0; c < random_corpus().size(); ++c) {
    const auto& sigma = random_corpus()[c];
    const int m = sigma.ground_size();
    const int truncation = 2 * m + 1;
    const std::vector<DGAModel> models{build_model(sigma, {Family::A, Arena::complex(), truncation}),
                                       build_model(sigma, {Family::B, Arena::complex(), std::nullopt}),
                                       build_model(sigma, {Family::K, Arena::complex(), truncation}),
                                       build_model(sigma, {Family::L, Arena::complex(), std::nullopt})};
    for (const auto& coefficients : three_rings()) {
      std::vector<HomologyEngine> engines;
      for (const auto& model : models) engines.emplace_back(model.complex(), coefficients);
      for (int k = 0; k <= 2 * m; ++k) {
        const auto reference = engines[1].group(k);
        for (std::size_t i : {0, 2, 3}) {
          ++comparisons;
          if (!(engines[i].group(k) == reference)) {
            o.fail("complex " + std::to_string(c) + ", model " + family_name(models[i].variant().family) +
                   ", degree " + std::to_string(k) + " over " + coefficients.name());
          }
        }
      }
    }
  }
  if (o.passed) o.detail = std::to_string(random_corpus().size()) + " complexes, " + std::to_string(comparisons) +
                           " group comparisons over Z, Z/2, Z/3";
  return o;
}

std::pair<SimplicialComplex, SimplicialComplex> random_split(const SimplicialComplex& sigma, std::mt19937_64& rng) {
  std::vector<IndexSet> first, second;
  for (IndexSet f : sigma.facets()) {
    const auto r = rng() % 3;  // first, second or both
    if (r != 1) first.push_back(f);
    if (r != 0) second.push_back(f);
  }
  const int m = sigma.ground_size();
  return {SimplicialComplex::from_facets(m, first), SimplicialComplex::from_facets(m, second)};
}

Outcome mayer_vietoris() {
  Outcome o;
  std::mt19937_64 rng(7);
  for (std::size_t c = 0; c < random_corpus().size(); ++c) {
    const auto& sigma = random_corpus()[c];
    const auto [first, second] = random_split(sigma, rng);
    if (!(union_of(first, second) == sigma)) o.fail("split does not cover complex " + std::to_string(c));
    const int truncation = 2 * sigma.ground_size() + 1;
    for (Family f : {Family::K, Family::L}) {
      const auto mv = mv_short_exact_sequences(first, second, f, Arena::complex(),
                                               f == Family::K ? std::optional<int>(truncation) : std::nullopt);
      const auto violations = mv_exactness_violations(mv);
      if (!violations.empty()) o.fail("complex " + std::to_string(c) + " " + family_name(f) + ": " + violations.front());
    }
  }
  if (o.passed) o.detail = "K and L sequences exact on " + std::to_string(random_corpus().size()) + " random splits";
  return o;
}

Outcome hochster_equality() {
  Outcome o;
  auto corpus = named_corpus();
  corpus.push_back(rp2());
  // RP² as a proper full subcomplex: vertex 7 hangs off vertex 1
  auto rp2_facets = rp2().facets();
  rp2_facets.push_back({1, 7});
  const auto extended = SimplicialComplex::from_facets(7, rp2_facets);
  corpus.push_back(extended);
  for (const auto& sigma : random_corpus()) corpus.push_back(sigma);
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    for (const auto& coefficients : {CoefficientRing::integers(), CoefficientRing::prime_field(2)}) {
      const auto topological = hochster_table_topological(corpus[c], coefficients);
      for (const auto& arena : {Arena::complex(), Arena::real()}) {
        const auto mismatches = table_mismatches(hochster_table_model(corpus[c], arena, coefficients), topological);
        if (!mismatches.empty()) o.fail("complex " + std::to_string(c) + ": " + mismatches.front());
      }
    }
  }
  const IndexSet six = IndexSet::range(6);
  for (const auto& arena : {Arena::complex(), Arena::real()}) {
    const auto entry = hochster_table_model(extended, arena, CoefficientRing::integers(),
                                            std::vector<IndexSet>{six}).entry(six, 3);
    if (entry.free_rank != 0 || entry.torsion != std::vector<Integer>{2}) {
      o.fail("RP2 entry in arena " + arena.name() + " is " + str(entry));
    }
  }
  if (o.passed) o.detail = std::to_string(corpus.size()) + " complexes agree; RP2 component gives Z/2 on both sides";
  return o;
}

Outcome product_laws() {
  Outcome o;
  auto corpus = named_corpus();
  for (const auto& sigma : random_corpus()) corpus.push_back(sigma);
  std::size_t pairs = 0;
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    const auto& sigma = corpus[c];
    const auto model = build_model(sigma, {Family::B, Arena::complex(), std::nullopt});
    const auto& cx = model.complex();
    for (int p = cx.min_degree(); p <= cx.max_degree(); ++p) {
      for (int q = cx.min_degree(); q <= cx.max_degree(); ++q) {
        for (std::size_t i = 0; i < cx.rank(p); ++i) {
          for (std::size_t j = 0; j < cx.rank(q); ++j) {
            const BasisRef a{p, i};
            const BasisRef b{q, j};
            if (!model.support(model.word(a)).intersects(model.support(model.word(b)))) continue;
            ++pairs;
            if (!model.product(a, b).empty()) {
              o.fail("complex " + std::to_string(c) + ": " + model.label(a) + " * " + model.label(b) + " != 0");
            }
          }
        }
      }
    }
    for (const auto& arena : {Arena::complex(), Arena::real(), Arena::odd(3)}) {
      const auto b = build_model(sigma, {Family::B, arena, std::nullopt});
      const auto ring = cohomology_ring(b, b.complex().max_degree(), CoefficientRing::integers());
      const auto report = commutativity_report(ring);
      if (!report.empty()) o.fail("complex " + std::to_string(c) + " " + arena.name() + ": " + report.front());
    }
  }
  const auto real = build_model(SimplicialComplex::simplex(1), {Family::B, Arena::real(), std::nullopt});
  const auto ts = normal_form(real, {"t1", "s1"});
  const auto st = normal_form(real, {"s1", "t1"});
  const auto t = normal_form(real, {"t1"});
  if (!(ts == t) || ts.empty()) o.fail("t1 s1 != t1 in the real model");
  if (!st.empty()) o.fail("s1 t1 != 0 in the real model");
  if (o.passed) {
    o.detail = std::to_string(pairs) + " overlapping pairs vanish; t1s1 = t1, s1t1 = 0; " +
               std::to_string(corpus.size()) + " rings graded-commutative";
  }
  return o;
}

Outcome tor_not_multiplicative() {
  Outcome o;
  const auto sigma = SimplicialComplex::empty(2);
  const auto z2 = CoefficientRing::prime_field(2);
  const auto real = build_model(sigma, {Family::B, Arena::real(), std::nullopt});
  const auto real_ring = cohomology_ring(real, real.complex().max_degree(), z2);
  const auto complex = build_model(sigma, {Family::B, Arena::complex(), std::nullopt});
  const auto exterior = cohomology_ring(complex, complex.complex().max_degree(), z2);
  const std::size_t real_count = count_idempotents(real_ring);
  const std::size_t exterior_count = count_idempotents(exterior);
  if (real_ring.size() != exterior.size()) o.fail("total ranks differ");
  if (real_count < 4) o.fail("H(B) has only " + std::to_string(real_count) + " idempotents");
  if (exterior_count != 2) o.fail("exterior algebra has " + std::to_string(exterior_count) + " idempotents");
  o.detail = "H(B;Z/2) has " + std::to_string(real_count) + " idempotents, the exterior algebra " +
             std::to_string(exterior_count) + (o.passed ? "" : "; " + o.detail);
  return o;
}

Outcome polytopal_ring() {
  Outcome o;
  const std::vector<std::pair<std::string, SimplicialComplex>> polytopes{
      {"segment", two_points()},
      {"triangle", SimplicialComplex::simplex_boundary(3)},
      {"square", cycle(4)},
      {"pentagon", cycle(5)},
      {"3-simplex", SimplicialComplex::simplex_boundary(4)}};
  std::size_t pairs = 0;
  for (const auto& [name, sigma] : polytopes) {
    const auto glm = glm_ring(sigma);
    const auto model = build_model(sigma, {Family::B, Arena::real(), std::nullopt});
    const auto ring = cohomology_ring(model, model.complex().max_degree(), CoefficientRing::integers());
    for (int k = 0; k <= std::max(glm.max_degree, ring.max_degree); ++k) {
      if (!(glm.group(k) == ring.group(k))) o.fail(name + ": degree " + std::to_string(k) + " differs");
    }
    for (IndexSet alpha : all_subsets(sigma.ground_size())) {
      for (IndexSet beta : all_subsets(sigma.ground_size())) {
        const auto report = cup_diagram_check(sigma, alpha, beta);
        pairs += report.pairs_checked;
        if (!report.ok()) o.fail(name + " " + alpha.to_string() + beta.to_string() + ": " + report.mismatches.front());
      }
    }
    if (name == "square") {
      if (glm.free_rank(0) != 1 || glm.free_rank(1) != 2 || glm.free_rank(2) != 1) o.fail("square ranks");
      bool nontrivial = false;
      for (std::size_t i : glm.indices(1)) {
        for (std::size_t j : glm.indices(1)) {
          const auto x = glm.product(i, j);
          for (std::size_t k : glm.indices(2)) nontrivial = nontrivial || abs(x[k]) == 1;
        }
      }
      if (!nontrivial) o.fail("square: degree-1 product vanishes");
    }
  }
  if (o.passed) o.detail = "5 polytopes, " + std::to_string(pairs) + " diagram pairs; square gives (1,2,1) with a unit product";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"sphere series (complex)", sphere_complex},
      {"sphere series (real)", sphere_real},
      {"generalized disks", generalized_disks},
      {"torus rings", torus_rings},
      {"quasi-isomorphism suite", quasi_isomorphisms},
      {"Mayer-Vietoris exactness", mayer_vietoris},
      {"Hochster equality", hochster_equality},
      {"product laws", product_laws},
      {"Tor non-multiplicativity", tor_not_multiplicative},
      {"polytopal ring", polytopal_ring}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu %s: %s (%.1fs)\n", outcome.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
    failures += outcome.passed ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
