#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momentangle/homology.hpp"
#include "momentangle/models.hpp"

namespace momentangle {

/// Bigraded table (α, degree) -> group. Only nonzero entries are stored;
/// degrees are the real gradings of the ĤatB components (0..|α|).
struct BettiTable {
  int m = 0;
  std::map<std::pair<IndexSet, int>, CohomologyGroup> entries;

  [[nodiscard]] CohomologyGroup entry(IndexSet alpha, int degree) const;
  void set(IndexSet alpha, int degree, CohomologyGroup group);
  friend bool operator==(const BettiTable& a, const BettiTable& b);
};

/// Homology of the α-components of the B-model. With `alphas` only those
/// components are computed.
BettiTable hochster_table_model(const SimplicialComplex& sigma, const Arena& arena,
                                const CoefficientRing& coefficients = CoefficientRing::integers(),
                                const std::optional<std::vector<IndexSet>>& alphas = std::nullopt);

/// Reduced cohomology of the full subcomplexes Σ_α, shifted up by one.
BettiTable hochster_table_topological(
    const SimplicialComplex& sigma,
    const CoefficientRing& coefficients = CoefficientRing::integers(),
    const std::optional<std::vector<IndexSet>>& alphas = std::nullopt);

/// Total cohomology: the α-entries shifted by (n-1)|α| and summed.
std::map<int, CohomologyGroup> assemble_poincare(const Arena& arena, const BettiTable& table);

/// Entries on which the two tables differ.
std::vector<std::string> table_mismatches(const BettiTable& a, const BettiTable& b);

/// α with Σ_k (-1)^k rank(α, k) != Σ_{σ ∈ Σ_α} (-1)^{|σ|}. Needs a table over
/// ℤ, ℚ or a field.
std::vector<std::string> euler_violations(const SimplicialComplex& sigma, const BettiTable& table);

}  // namespace momentangle
