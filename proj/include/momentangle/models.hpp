#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momentangle/based_complex.hpp"
#include "momentangle/homology.hpp"
#include "momentangle/simplicial_complex.hpp"

namespace momentangle {

enum class Family { A, B, K, L, HatB };

/// Which moment-angle complex a model describes: Z_Σ(D^n, S^{n-1}) for even n
/// (complex), odd n ≥ 3 (odd), or n = 1 (real, with a separate mod-2 arena
/// for the A-model).
class Arena {
 public:
  enum class Kind { Complex, Odd, Real, RealMod2 };

  static Arena complex(int n = 2);
  static Arena odd(int n);
  static Arena real() { return {Kind::Real, 1}; }
  static Arena real_mod2() { return {Kind::RealMod2, 1}; }
  /// Arena of (D^n, S^{n-1}): n = 1 real, even n complex, odd n ≥ 3 odd.
  static Arena disk(int n);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] bool is_real() const { return kind_ == Kind::Real || kind_ == Kind::RealMod2; }
  [[nodiscard]] int s_degree() const { return n_ - 1; }
  [[nodiscard]] int t_degree() const { return n_; }
  /// ℤ/2 for the mod-2 arena, ℤ otherwise.
  [[nodiscard]] CoefficientRing natural_coefficients() const;
  [[nodiscard]] std::string name() const;

  friend bool operator==(const Arena&, const Arena&) = default;

 private:
  Arena(Kind kind, int n) : kind_(kind), n_(n) {}
  Kind kind_;
  int n_;
};

std::string family_name(Family family);

struct ModelVariant {
  Family family = Family::B;
  Arena arena = Arena::complex();
  /// Top degree built for the infinite families A and K.
  std::optional<int> truncation;
};

/// Throws std::invalid_argument for combinations the models do not cover.
void validate_variant(const ModelVariant& variant, const SimplicialComplex& sigma);

/// Model of a single vertex; global models are tensor products of these,
/// restricted to words whose face support lies in Σ.
struct LocalModel {
  struct Element {
    std::string pattern;  // letters with '#' for the vertex index, e.g. "t#^2s#"
    int degree = 0;
    int weight = 0;       // multidegree contribution
    bool in_face = false; // counts towards the face support
  };
  using Terms = std::vector<std::pair<int, int>>;  // (element, coefficient)
  struct CoTerm {
    int left;
    int right;
    int coefficient;
  };

  std::vector<Element> elements;
  std::vector<Terms> differential;
  std::vector<std::vector<Terms>> product;      // empty without a product
  std::vector<std::vector<CoTerm>> coproduct;   // empty without a coproduct
};

/// Local model of the family in the arena. For A and K, elements of degree
/// above `max_degree` are omitted.
LocalModel local_model(Family family, const Arena& arena, std::optional<int> max_degree);

/// Basis word: local element index for each vertex 1..m.
using Word = std::vector<std::uint16_t>;

struct BasisRef {
  int degree = 0;
  std::size_t index = 0;
  friend auto operator<=>(const BasisRef&, const BasisRef&) = default;
};

/// Sparse element of a model: coefficient per basis element.
using ModelElement = std::map<BasisRef, Integer>;

struct CoproductTerm {
  BasisRef left;
  BasisRef right;
  Integer coefficient;
};

/// One of the finite models A, B, K, L, ĤatB of a simplicial complex, with
/// its differential and, depending on the family, product or coproduct.
class DGAModel {
 public:
  DGAModel(SimplicialComplex sigma, ModelVariant variant);

  [[nodiscard]] const SimplicialComplex& sigma() const { return sigma_; }
  [[nodiscard]] const ModelVariant& variant() const { return variant_; }
  [[nodiscard]] const LocalModel& local() const { return local_; }
  [[nodiscard]] const BasedComplex& complex() const { return complex_; }
  [[nodiscard]] int ground_size() const { return sigma_.ground_size(); }
  [[nodiscard]] bool has_product() const { return !local_.product.empty(); }
  [[nodiscard]] bool has_coproduct() const { return !local_.coproduct.empty(); }
  [[nodiscard]] CoefficientRing natural_coefficients() const {
    return variant_.arena.natural_coefficients();
  }

  [[nodiscard]] const Word& word(BasisRef ref) const;
  [[nodiscard]] std::optional<BasisRef> locate(const Word& word) const;
  [[nodiscard]] int degree_of(const Word& word) const;
  [[nodiscard]] bool allowed(const Word& word) const;
  [[nodiscard]] IndexSet face_support(const Word& word) const;
  /// Vertices whose letter is not the unit (or, for ĤatB, all of [m]).
  [[nodiscard]] IndexSet support(const Word& word) const;
  [[nodiscard]] std::string label(const Word& word) const;
  [[nodiscard]] std::string label(BasisRef ref) const { return label(word(ref)); }

  /// Product of two basis elements; terms outside the model (non-faces,
  /// beyond the truncation) are dropped.
  [[nodiscard]] ModelElement product(BasisRef a, BasisRef b) const;
  /// Product of cochain vectors of degrees p and q, as a vector of degree p+q.
  [[nodiscard]] IntVector multiply(const IntVector& a, int p, const IntVector& b, int q) const;
  [[nodiscard]] std::vector<CoproductTerm> coproduct(BasisRef x) const;
  [[nodiscard]] ModelElement differential(BasisRef x) const;

 private:
  void enumerate();
  void build_differentials();

  SimplicialComplex sigma_;
  ModelVariant variant_;
  LocalModel local_;
  std::vector<std::vector<Word>> words_;  // by degree offset
  std::map<Word, BasisRef> index_;
  BasedComplex complex_;
};

/// Builds and checks (d∘d = 0, multigrading) the model.
DGAModel build_model(const SimplicialComplex& sigma, const ModelVariant& variant);

/// ĤatB(Σ): span of the words with a letter s or t at every vertex, with the
/// real grading (deg s = 0, deg t = 1) and the real B differential.
DGAModel build_hat_model(const SimplicialComplex& sigma, bool mod2 = false);

/// Violations of d(xy) = dx·y + (-1)^{|x|} x·dy over all basis pairs whose
/// product lies in the trusted range.
std::vector<std::string> leibniz_violations(const DGAModel& model);
/// Violations of Δd = (d⊗1 + 1⊗d)Δ over all basis elements.
std::vector<std::string> coleibniz_violations(const DGAModel& model);

/// Sign-corrected comparison of the B-model with the dual of the L-model in
/// the same arena: the differential of B equals the dualized differential of
/// L after rescaling the basis by ±1, and every structure constant of the
/// product of B equals the matching coproduct constant of L.
std::vector<std::string> duality_violations(const SimplicialComplex& sigma, const Arena& arena);

/// Checks that the basis inclusion L ↪ K commutes with differentials and
/// coproducts, and returns violations.
std::vector<std::string> inclusion_violations(const DGAModel& l_model, const DGAModel& k_model);

/// Witness for the tensor factorization of the model of a simplex: the model
/// of σ (other vertices are ghosts) matches the tensor product of the
/// single-vertex models of its vertices (full local model) and the ghost
/// vertices (unit and non-face letters only).
struct TensorFactorization {
  std::vector<std::vector<std::size_t>> factor_ranks;  // per vertex, ranks by degree
  std::vector<std::size_t> product_ranks;              // ranks of the tensor product
  std::vector<std::size_t> model_ranks;                // ranks of the model
  bool degrees_match = false;
  bool differentials_match = false;
};
TensorFactorization tensor_factorization(int m, IndexSet simplex, Family family,
                                         const Arena& arena, std::optional<int> truncation = {});

/// The two Mayer–Vietoris short exact sequences for Σ = Σ1 ∪ Σ2:
///   0 -> M(Σ1 ∩ Σ2) -> M(Σ1) ⊕ M(Σ2) -> M(Σ1 ∪ Σ2) -> 0
/// for M = K or L, with basis-level maps (diagonal inclusion and difference).
struct MayerVietoris {
  DGAModel intersection;
  DGAModel first;
  DGAModel second;
  DGAModel union_model;
  /// Per degree: C(Σ1 ∩ Σ2) -> C(Σ1) ⊕ C(Σ2) (first block rows, then second).
  std::map<int, IntMatrix> inclusion;
  /// Per degree: C(Σ1) ⊕ C(Σ2) -> C(Σ1 ∪ Σ2), (x, y) ↦ x - y.
  std::map<int, IntMatrix> difference;
};
MayerVietoris mv_short_exact_sequences(const SimplicialComplex& first,
                                       const SimplicialComplex& second, Family family,
                                       const Arena& arena, std::optional<int> truncation = {});
/// Exactness failures: injectivity, surjectivity, kernel = image (by rank and
/// by lattice membership), chain-map property.
std::vector<std::string> mv_exactness_violations(const MayerVietoris& mv);

/// Splits the B- or L-model by squarefree multidegree α.
std::map<IndexSet, BasedComplex> hochster_components(const DGAModel& model);

/// Shift of the α-component relative to ĤatB(Σ_α): (n-1)|α| (zero for real).
int hochster_shift(const Arena& arena, IndexSet alpha);

/// Isomorphism between the α-component of a B- or L-model and ĤatB(Σ_α):
/// for each component basis element (by degree and index) the matching ĤatB
/// element and a sign, such that the component differential (dualized for L)
/// equals the signed ĤatB differential.
struct ComponentIsomorphism {
  IndexSet alpha;
  int shift = 0;
  // keyed by component basis ref (degree in the model)
  std::map<BasisRef, std::pair<BasisRef, int>> to_hat;
  std::map<BasisRef, std::pair<BasisRef, int>> from_hat;
};
/// Throws std::logic_error when no signed bijection matches the differentials.
ComponentIsomorphism component_isomorphism(const DGAModel& model, const DGAModel& hat_model,
                                           IndexSet alpha);

}  // namespace momentangle
