#include "momentangle/verify.hpp"

#include <functional>

#include "momentangle/hochster.hpp"
#include "momentangle/polytope.hpp"
#include "momentangle/ring.hpp"

namespace momentangle {

namespace {

using Violations = std::vector<std::string>;

CheckResult run(const std::string& name, const std::function<Violations()>& body) {
  CheckResult r;
  r.name = name;
  try {
    const Violations v = body();
    r.passed = v.empty();
    if (!v.empty()) r.detail = v.front() + (v.size() > 1 ? " (+" + std::to_string(v.size() - 1) + " more)" : "");
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

void append(Violations& out, const std::string& prefix, const Violations& more) {
  for (const auto& v : more) out.push_back(prefix + ": " + v);
}

const std::vector<Arena>& finite_arenas() {
  static const std::vector<Arena> arenas{Arena::complex(), Arena::odd(3), Arena::real()};
  return arenas;
}

Violations compare_homology(const BasedComplex& a, const BasedComplex& b, int top,
                            const std::string& what) {
  Violations out;
  for (const auto& coefficients :
       {CoefficientRing::integers(), CoefficientRing::prime_field(2), CoefficientRing::prime_field(3)}) {
    HomologyEngine ea(a, coefficients);
    HomologyEngine eb(b, coefficients);
    for (int k = 0; k <= top; ++k) {
      if (!(ea.group(k) == eb.group(k))) {
        out.push_back(what + " differ in degree " + std::to_string(k) + " over " +
                      coefficients.name());
      }
    }
  }
  return out;
}

std::pair<SimplicialComplex, SimplicialComplex> split(const SimplicialComplex& sigma) {
  const auto facets = sigma.facets();
  const int m = sigma.ground_size();
  if (facets.size() < 2) return {sigma, sigma};
  const std::size_t half = facets.size() / 2;
  const auto middle = facets.begin() + static_cast<std::ptrdiff_t>(half);
  return {SimplicialComplex::from_facets(m, std::vector<IndexSet>(facets.begin(), middle)),
          SimplicialComplex::from_facets(m, std::vector<IndexSet>(middle, facets.end()))};
}

}  // namespace

std::vector<CheckResult> verify_complex(const SimplicialComplex& sigma, const VerifyOptions& options) {
  const int m = sigma.ground_size();
  const int cap = 2 * m + 1;  // trusted through 2m, the top degree of B and L
  std::vector<CheckResult> out;

  out.push_back(run("d∘d = 0", [&] {
    Violations v;
    for (const auto& arena : finite_arenas()) {
      for (Family f : {Family::B, Family::L}) build_model(sigma, {f, arena, std::nullopt});
    }
    build_model(sigma, {Family::B, Arena::real_mod2(), std::nullopt});
    build_model(sigma, {Family::A, Arena::complex(), cap});
    build_model(sigma, {Family::K, Arena::complex(), cap});
    build_model(sigma, {Family::A, Arena::real_mod2(), m + 1});
    build_hat_model(sigma);
    return v;
  }));

  out.push_back(run("Leibniz rule", [&] {
    Violations v;
    for (const auto& arena : finite_arenas()) {
      append(v, arena.name(), leibniz_violations(build_model(sigma, {Family::B, arena, std::nullopt})));
    }
    append(v, "A", leibniz_violations(build_model(sigma, {Family::A, Arena::complex(), cap})));
    append(v, "A mod 2", leibniz_violations(build_model(sigma, {Family::A, Arena::real_mod2(), m + 1})));
    return v;
  }));

  out.push_back(run("co-Leibniz rule", [&] {
    Violations v;
    for (const auto& arena : finite_arenas()) {
      append(v, arena.name(), coleibniz_violations(build_model(sigma, {Family::L, arena, std::nullopt})));
    }
    append(v, "K", coleibniz_violations(build_model(sigma, {Family::K, Arena::complex(), cap})));
    return v;
  }));

  out.push_back(run("product/coproduct duality", [&] {
    Violations v;
    for (const auto& arena : finite_arenas()) append(v, arena.name(), duality_violations(sigma, arena));
    return v;
  }));

  out.push_back(run("Mayer–Vietoris exactness", [&] {
    Violations v;
    const auto [first, second] = split(sigma);
    append(v, "L", mv_exactness_violations(mv_short_exact_sequences(first, second, Family::L, Arena::complex())));
    append(v, "K", mv_exactness_violations(mv_short_exact_sequences(first, second, Family::K, Arena::complex(), cap)));
    return v;
  }));

  out.push_back(run("L ↪ K quasi-isomorphism", [&] {
    const auto l = build_model(sigma, {Family::L, Arena::complex(), std::nullopt});
    const auto k = build_model(sigma, {Family::K, Arena::complex(), cap});
    Violations v = inclusion_violations(l, k);
    append(v, "homology", compare_homology(l.complex(), k.complex(), 2 * m, "H(L) and H(K)"));
    return v;
  }));

  out.push_back(run("A ≃ B", [&] {
    const auto a = build_model(sigma, {Family::A, Arena::complex(), cap});
    const auto b = build_model(sigma, {Family::B, Arena::complex(), std::nullopt});
    return compare_homology(a.complex(), b.complex(), 2 * m, "H(A) and H(B)");
  }));

  out.push_back(run("Hochster formula", [&] {
    Violations v;
    const auto topological = hochster_table_topological(sigma);
    for (const auto& arena : finite_arenas()) {
      append(v, arena.name(), table_mismatches(hochster_table_model(sigma, arena), topological));
    }
    append(v, "Euler", euler_violations(sigma, topological));
    return v;
  }));

  out.push_back(run("overlap products vanish", [&] {
    Violations v;
    const auto model = build_model(sigma, {Family::B, Arena::complex(), std::nullopt});
    const auto ring = cohomology_ring(model, model.complex().max_degree(), CoefficientRing::integers());
    auto support = [](const Multidegree& d) {
      IndexSet s;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] != 0) s = s.with(static_cast<int>(i) + 1);
      }
      return s;
    };
    for (const auto& [key, value] : ring.products) {
      if (support(ring.basis[key.first].multidegree).intersects(support(ring.basis[key.second].multidegree))) {
        v.push_back("basis " + std::to_string(key.first) + " · " + std::to_string(key.second) + " != 0");
      }
    }
    return v;
  }));

  out.push_back(run("graded commutativity", [&] {
    Violations v;
    for (const auto& arena : finite_arenas()) {
      const auto model = build_model(sigma, {Family::B, arena, std::nullopt});
      const auto ring = cohomology_ring(model, model.complex().max_degree(), CoefficientRing::integers());
      append(v, arena.name(), commutativity_report(ring));
      append(v, arena.name(), associativity_violations(ring));
    }
    return v;
  }));

  if (options.idempotents && m <= 4) {
    out.push_back(run("ℤ/2 idempotency on ghost vertices", [&] {
      Violations v;
      const auto model = build_model(SimplicialComplex::empty(m), {Family::B, Arena::real_mod2(), std::nullopt});
      const auto ring = cohomology_ring(model, 0, CoefficientRing::prime_field(2));
      const std::size_t expected = std::size_t{1} << ring.size();
      if (count_idempotents(ring) != expected) v.push_back("some class of H^0 is not idempotent");
      return v;
    }));
  }

  if (options.polytope) {
    out.push_back(run("dual-block retraction", [&] {
      Violations v;
      for (IndexSet alpha : all_subsets(m)) {
        const auto report = theta_check(sigma, alpha);
        if (!report.ok()) {
          v.push_back(alpha.to_string() + ": " + (report.issues.empty() ? "failed" : report.issues.front()));
        }
      }
      return v;
    }));
    out.push_back(run("cup product diagram", [&] {
      Violations v;
      for (IndexSet alpha : all_subsets(m)) {
        for (IndexSet beta : all_subsets(m)) {
          append(v, alpha.to_string() + "," + beta.to_string(), cup_diagram_check(sigma, alpha, beta).mismatches);
        }
      }
      return v;
    }));
    out.push_back(run("GLM ring vs real B ring", [&] {
      Violations v;
      const auto glm = glm_ring(sigma);
      const auto model = build_model(sigma, {Family::B, Arena::real(), std::nullopt});
      const auto ring = cohomology_ring(model, model.complex().max_degree(), CoefficientRing::integers());
      for (int k = 0; k <= std::max(glm.max_degree, ring.max_degree); ++k) {
        if (!(glm.group(k) == ring.group(k))) v.push_back("degree " + std::to_string(k) + " differs");
      }
      return v;
    }));
  }
  return out;
}

}  // namespace momentangle
