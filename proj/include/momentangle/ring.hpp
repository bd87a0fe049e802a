#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "momentangle/homology.hpp"
#include "momentangle/models.hpp"

namespace momentangle {

/// Sparse coordinate vector over the global basis of a RingPresentation.
using SparseCoords = std::vector<std::pair<std::size_t, Integer>>;

struct RingBasisElement {
  int degree = 0;
  Integer order;            // 0 for a free generator
  Multidegree multidegree;  // sort key inside a degree
  std::size_t component = 0;
  std::string name;
  IntVector representative;  // cocycle in the component's cochains
};

/// Graded basis of a cohomology ring and its structure constants. Basis
/// elements are sorted by (degree, multidegree, position in the Smith form).
class RingPresentation {
 public:
  CoefficientRing coefficients = CoefficientRing::integers();
  int max_degree = 0;
  std::vector<std::string> components;
  std::vector<RingBasisElement> basis;
  /// Nonzero products of basis pairs (i, j), reduced.
  std::map<std::pair<std::size_t, std::size_t>, SparseCoords> products;

  [[nodiscard]] std::size_t size() const { return basis.size(); }
  [[nodiscard]] std::vector<std::size_t> indices(int degree) const;
  [[nodiscard]] std::size_t free_rank(int degree) const;
  [[nodiscard]] std::vector<Integer> torsion(int degree) const;
  [[nodiscard]] CohomologyGroup group(int degree) const;

  /// Reduces global coordinates modulo generator orders and the coefficients.
  [[nodiscard]] IntVector reduce(IntVector x) const;
  [[nodiscard]] IntVector product(std::size_t i, std::size_t j) const;
  /// Bilinear extension of the structure constants to global coordinates.
  [[nodiscard]] IntVector multiply(const IntVector& x, const IntVector& y) const;
  [[nodiscard]] IntVector basis_vector(std::size_t i) const;
};

/// Letters are labels of single-vertex basis elements such as "s2", "t1" or
/// "u3^2". Returns the product of the letters in the model (empty when it
/// vanishes). Throws std::invalid_argument for unknown letters.
ModelElement normal_form(const DGAModel& model, const std::vector<std::string>& letters);

/// Cohomology ring of a model with a product, in degrees 0..maxdeg. Throws
/// TruncationError when maxdeg is beyond the trusted range of the model and
/// std::logic_error if a product of cocycles fails to be a cocycle.
RingPresentation cohomology_ring(const DGAModel& model, int maxdeg,
                                 const CoefficientRing& coefficients);

/// One summand of a ring assembled from several cochain complexes.
struct RingComponent {
  std::string name;
  BasedComplex complex;
  std::optional<Multidegree> multidegree;  // overrides the engine's block key
  std::function<std::string(int degree, const IntVector&)> describe;
};

/// Product of representatives: (left component, vector, degree) x (right ...)
/// -> (target component, vector) or nothing when the product is zero.
using ComponentProduct = std::function<std::optional<std::pair<std::size_t, IntVector>>(
    std::size_t, const IntVector&, int, std::size_t, const IntVector&, int)>;

RingPresentation assemble_ring(std::vector<RingComponent> components, int maxdeg,
                               const CoefficientRing& coefficients,
                               const ComponentProduct& product);

/// Basis pairs with x·y != (-1)^{|x||y|} y·x.
std::vector<std::string> commutativity_report(const RingPresentation& ring);
/// Basis triples with (xy)z != x(yz).
std::vector<std::string> associativity_violations(const RingPresentation& ring);
/// Number of elements x with x·x = x; requires ℤ/2 coefficients and at most
/// 24 basis elements (exhaustive enumeration).
std::size_t count_idempotents(const RingPresentation& ring);
/// Same count restricted to the degree-0 part.
std::size_t count_degree_zero_idempotents(const RingPresentation& ring);

/// *-product of a ∈ ĤatB(Σ_α) (degree p) and b ∈ ĤatB(Σ_β) (degree q),
/// computed by multiplying their images inside the B-model of Σ_{α∪β}.
/// Degrees are the real gradings of ĤatB; the result lies in ĤatB(Σ_{α∪β})
/// in degree p+q. Arena must be complex, odd or real.
IntVector star_product(const SimplicialComplex& sigma, IndexSet alpha, IndexSet beta,
                       const IntVector& a, int p, const IntVector& b, int q, const Arena& arena);

/// *-products of all pairs of cohomology basis classes of the α- and
/// β-components, in coordinates of the (α∪β)-component.
struct StarTable {
  IndexSet alpha;
  IndexSet beta;
  struct Entry {
    int left_degree;
    std::size_t left;
    int right_degree;
    std::size_t right;
    IntVector coordinates;  // in the target degree left_degree + right_degree
  };
  std::vector<Entry> entries;
};
StarTable star_products(const SimplicialComplex& sigma, IndexSet alpha, IndexSet beta,
                        const Arena& arena,
                        const CoefficientRing& coefficients = CoefficientRing::integers());

}  // namespace momentangle
