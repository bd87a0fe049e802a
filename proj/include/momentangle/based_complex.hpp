#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "momentangle/int_matrix.hpp"

namespace momentangle {

/// Raised when a degree outside the trusted range of a truncated complex is
/// queried.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

using Multidegree = std::vector<int>;

struct BasisElement {
  std::string label;
  Multidegree multidegree;  // empty when the complex is not multigraded
};

/// Finitely generated free graded module with integer differentials.
///
/// Direction +1 is a cochain complex (d: C^k -> C^{k+1}), -1 a chain complex
/// (d: C_k -> C_{k-1}). Degrees outside [min_degree, max_degree] are zero. A
/// truncated complex was cut off at its top degree, so homology there is not
/// meaningful.
class BasedComplex {
 public:
  static constexpr int kCochain = 1;
  static constexpr int kChain = -1;

  BasedComplex() = default;
  BasedComplex(int direction, int min_degree, std::vector<std::vector<BasisElement>> bases,
               std::optional<int> truncation = std::nullopt);

  [[nodiscard]] int direction() const { return direction_; }
  [[nodiscard]] int min_degree() const { return min_degree_; }
  [[nodiscard]] int max_degree() const {
    return min_degree_ + static_cast<int>(bases_.size()) - 1;
  }
  [[nodiscard]] std::optional<int> truncation() const { return truncation_; }
  [[nodiscard]] bool in_range(int degree) const {
    return degree >= min_degree_ && degree <= max_degree();
  }
  /// Largest degree whose homology is fully determined.
  [[nodiscard]] int trusted_max() const;
  /// Throws TruncationError outside the trusted range.
  void require_trusted(int degree) const;

  [[nodiscard]] std::size_t rank(int degree) const;
  [[nodiscard]] std::size_t total_rank() const;
  [[nodiscard]] const std::vector<BasisElement>& basis(int degree) const;
  [[nodiscard]] bool multigraded() const;
  /// Index of the basis element with the given label, if any.
  [[nodiscard]] std::optional<std::size_t> find(int degree, const std::string& label) const;

  /// Map out of degree k, of shape rank(k + direction) x rank(k).
  [[nodiscard]] const IntMatrix& differential(int degree) const;
  void set_differential(int degree, IntMatrix matrix);

  /// Throws std::logic_error unless d∘d = 0 and d preserves the
  /// multigrading. Over ℤ/p the composite is checked modulo p.
  void check(const CoefficientRing& coefficients = CoefficientRing::integers()) const;

 private:
  int direction_ = kCochain;
  int min_degree_ = 0;
  std::optional<int> truncation_;
  std::vector<std::vector<BasisElement>> bases_;
  std::vector<IntMatrix> differentials_;
  std::vector<std::map<std::string, std::size_t>> label_index_;
};

/// Dual complex with the opposite direction: the matrix between degrees n and
/// n+1 is transposed and multiplied by -(-1)^n. Bases and multidegrees are
/// kept. Applying it twice returns the original matrices.
BasedComplex dualize(const BasedComplex& complex);

/// Tensor product with d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy. Both factors must
/// have the same direction. Basis elements of degree k are the pairs of
/// degrees (p, k-p) in increasing p, then by index in each factor; labels are
/// joined with '|' and multidegrees concatenated. With a truncation, degrees
/// above it are dropped.
BasedComplex tensor_product(const BasedComplex& a, const BasedComplex& b,
                            std::optional<int> truncation = std::nullopt);

}  // namespace momentangle
