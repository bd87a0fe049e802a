#pragma once

#include <optional>
#include <string>
#include <vector>

#include "momentangle/cochains.hpp"
#include "momentangle/ring.hpp"

namespace momentangle {

// Σ is read as the boundary complex of the simplicial polytope dual to a
// simple polytope P. P is modelled by CΣ' (cone over the barycentric
// subdivision) and P_α by the closed dual blocks of the vertices in α.
// Whether Σ is polytopal is the caller's claim; nothing here checks it.

/// Relative cochain ring of (CΣ', P_α) with the Alexander–Whitney product.
/// Degrees default to 0..dim CΣ'.
RingPresentation relative_ring_P(const SimplicialComplex& sigma, IndexSet alpha,
                                 std::optional<int> maxdeg = std::nullopt,
                                 const CoefficientRing& coefficients = CoefficientRing::integers());

/// Chain-level check of the retraction (CΣ', P_α) -> (CΣ'_α, Σ'_α),
/// v_σ -> v_{σ∩α} (apex when σ∩α = ∅).
struct ThetaReport {
  IndexSet alpha;
  bool chain_map = false;
  bool retraction_identity = false;  // restriction ∘ pullback = id on cochains
  bool groups_match = false;         // H(P,P_α) ≅ H(CΣ'_α, Σ'_α) with torsion
  bool cone_comparison = false;      // pullback from (CΣ_α, Σ_α) is unimodular
  std::vector<CohomologyGroup> polytope_side;
  std::vector<CohomologyGroup> cone_side;
  std::vector<std::string> issues;
  [[nodiscard]] bool ok() const {
    return chain_map && retraction_identity && groups_match && cone_comparison;
  }
};
ThetaReport theta_check(const SimplicialComplex& sigma, IndexSet alpha);

/// Compares, for all pairs of basis classes x of H(CΣ_α, Σ_α) and y of
/// H(CΣ_β, Σ_β), the class Φ_{α∪β}(x * y) with Φ_α(x) ∪ Φ_β(y) in
/// H(CΣ', P_{α∪β}). Φ_α is the pullback along v_σ -> min(σ∩α) (apex when
/// empty). x * y is the Alexander–Whitney product of the projections on the
/// cone over Σ_{α∪β}, ordered with α before the apex and β∖α after it.
struct DiagramReport {
  IndexSet alpha;
  IndexSet beta;
  std::vector<int> vertex_order;  // order used on the cone over Σ_{α∪β}
  std::size_t pairs_checked = 0;
  std::vector<std::string> mismatches;
  [[nodiscard]] bool ok() const { return mismatches.empty(); }
};
DiagramReport cup_diagram_check(const SimplicialComplex& sigma, IndexSet alpha, IndexSet beta);

/// ⊕_α H(CΣ', P_α) with products H(P,P_α) ⊗ H(P,P_β) -> H(P,P_{α∪β}).
/// Basis elements carry the indicator vector of α as multidegree.
RingPresentation glm_ring(const SimplicialComplex& sigma, std::optional<int> maxdeg = std::nullopt,
                          const CoefficientRing& coefficients = CoefficientRing::integers());

}  // namespace momentangle
