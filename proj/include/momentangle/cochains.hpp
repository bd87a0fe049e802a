#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "momentangle/based_complex.hpp"
#include "momentangle/homology.hpp"
#include "momentangle/simplicial_complex.hpp"

namespace momentangle {

/// Ordered simplicial cochains of a pair (K, L) under a total vertex order:
/// C^k is spanned by the k-simplices of K not in L, each written as its
/// vertex sequence in increasing order. The differential is the dual (in the
/// sense of `dualize`) of the simplicial boundary.
class CochainModel {
 public:
  /// `vertex_order` lists the vertices of the ambient ground set from
  /// smallest to largest; empty means 1 < 2 < ... < m.
  explicit CochainModel(const SimplicialPair& pair, std::vector<int> vertex_order = {});

  [[nodiscard]] const BasedComplex& complex() const { return complex_; }
  [[nodiscard]] const SimplicialPair& pair() const { return pair_; }
  [[nodiscard]] const std::vector<int>& vertex_order() const { return order_; }
  [[nodiscard]] int max_degree() const { return complex_.max_degree(); }

  /// Vertex sequence of basis simplex i in degree k.
  [[nodiscard]] const std::vector<int>& simplex(int degree, std::size_t index) const;
  [[nodiscard]] std::optional<std::size_t> index_of(int degree, IndexSet vertices) const;

  /// Alexander–Whitney product (a ∪ b)(σ) = (-1)^{pq} a(σ front p) b(σ back q).
  /// Both inputs and the result live in this model.
  [[nodiscard]] IntVector cup(const IntVector& a, int p, const IntVector& b, int q) const;
  /// Product of cochains from two models on the same ambient complex and
  /// vertex order, evaluated on the simplices of this model.
  [[nodiscard]] IntVector cup(const CochainModel& left, const IntVector& a, int p,
                              const CochainModel& right, const IntVector& b, int q) const;

  /// Pullback of a cochain c on `target` along the simplicial map given by
  /// vertex_map[v] for vertices v of this model (1-based; index 0 unused).
  /// Degenerate images give 0; reordering contributes the permutation sign.
  [[nodiscard]] IntVector pullback(const CochainModel& target, const std::vector<int>& vertex_map,
                                   const IntVector& c, int degree) const;
  /// Same map as a matrix C^k(target) -> C^k(this).
  [[nodiscard]] IntMatrix pullback_matrix(const CochainModel& target,
                                          const std::vector<int>& vertex_map, int degree) const;

 private:
  SimplicialPair pair_;
  std::vector<int> order_;
  std::vector<int> position_;  // position_[v] = rank of vertex v in order_
  std::vector<std::vector<std::vector<int>>> simplices_;
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> index_;
  BasedComplex complex_;
};

/// Cochain complex of the pair under the natural vertex order.
BasedComplex relative_cochain_complex(const SimplicialPair& pair);

/// Augmented cochain complex of sigma, with the empty face in degree -1.
BasedComplex augmented_cochain_complex(const SimplicialComplex& sigma);

/// Reduced cohomology in degrees -1 .. dim(sigma).
std::vector<CohomologyGroup> reduced_cohomology(
    const SimplicialComplex& sigma,
    const CoefficientRing& coefficients = CoefficientRing::integers());

/// Relative cohomology of the pair in degrees 0 .. dim(ambient).
std::vector<CohomologyGroup> relative_cohomology(
    const SimplicialPair& pair, const CoefficientRing& coefficients = CoefficientRing::integers());

}  // namespace momentangle
