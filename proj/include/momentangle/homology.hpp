#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "momentangle/based_complex.hpp"
#include "momentangle/smith.hpp"

namespace momentangle {

struct HomologyGenerator {
  Integer order;             // 0 for a free generator
  Multidegree multidegree;   // block the generator lives in
  IntVector representative;  // cycle in the basis of the degree
};

/// (Co)homology in one degree. Over a field the free rank is the dimension and
/// torsion is empty.
struct CohomologyGroup {
  int degree = 0;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors, each ≥ 2, d_i | d_{i+1}
  std::vector<HomologyGenerator> generators;

  [[nodiscard]] bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const CohomologyGroup& a, const CohomologyGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

/// Homology of a based complex with cached per-degree data. Blocks of equal
/// multidegree are reduced independently. Generators in a degree are ordered
/// by multidegree (lexicographic), then by position in the Smith form of the
/// block.
class HomologyEngine {
 public:
  HomologyEngine(BasedComplex complex, CoefficientRing coefficients);
  ~HomologyEngine();
  HomologyEngine(HomologyEngine&&) noexcept;
  HomologyEngine& operator=(HomologyEngine&&) noexcept;

  [[nodiscard]] const BasedComplex& complex() const { return complex_; }
  [[nodiscard]] const CoefficientRing& coefficients() const { return coefficients_; }

  /// Throws TruncationError outside the trusted range.
  const CohomologyGroup& group(int degree);

  [[nodiscard]] bool is_cycle(int degree, const IntVector& v) const;
  /// Coordinates of the class of a cycle in the generator basis; torsion
  /// coordinates reduced modulo their orders. Throws std::logic_error if v is
  /// not a cycle.
  IntVector coordinates(int degree, const IntVector& cycle);
  /// True when v is a boundary (with the engine's coefficients).
  bool is_boundary(int degree, const IntVector& v);
  /// Σ coords[i] · representative[i].
  IntVector combination(int degree, const IntVector& coords);

 private:
  struct DegreeData;
  DegreeData& data(int degree);

  BasedComplex complex_;
  CoefficientRing coefficients_;
  std::map<int, std::unique_ptr<DegreeData>> cache_;
};

/// One-shot homology computation.
CohomologyGroup homology(const BasedComplex& complex, int degree,
                         const CoefficientRing& coefficients = CoefficientRing::integers());

/// Dimension of homology over a field computed from ranks alone (no
/// generators). Serves as an independent check of the engine.
std::size_t field_betti_number(const BasedComplex& complex, int degree,
                               const CoefficientRing& field);

/// Dimension over ℤ/p predicted by universal coefficients from the integral
/// groups in degree k and in degree k + direction.
std::size_t universal_coefficient_rank(const CohomologyGroup& integral,
                                       const CohomologyGroup& integral_target, std::int64_t p);

}  // namespace momentangle
