#pragma once

#include <unordered_set>
#include <vector>

#include "momentangle/index_set.hpp"

namespace momentangle {

/// Finite simplicial complex on the ground set [m]. Always contains the empty
/// face; elements of [m] lying in no face are ghost vertices.
class SimplicialComplex {
 public:
  /// `faces` must be downward closed and contain the empty set.
  SimplicialComplex(int m, std::vector<IndexSet> faces);

  /// Downward closure of `facets`.
  static SimplicialComplex from_facets(int m, const std::vector<IndexSet>& facets);
  /// Same, with facets given as lists of 1-based vertices (JSON input).
  static SimplicialComplex from_facet_lists(int m, const std::vector<std::vector<int>>& facets);

  /// Full simplex on [m].
  static SimplicialComplex simplex(int m);
  /// Boundary of the simplex on [m].
  static SimplicialComplex simplex_boundary(int m);
  /// Only the empty face; every element of [m] is a ghost vertex.
  static SimplicialComplex empty(int m);

  [[nodiscard]] int ground_size() const { return m_; }
  /// Faces in graded-lex order, starting with the empty face.
  [[nodiscard]] const std::vector<IndexSet>& faces() const { return faces_; }
  [[nodiscard]] bool contains(IndexSet face) const { return lookup_.count(face.bits()) != 0; }
  [[nodiscard]] IndexSet vertex_set() const;
  [[nodiscard]] std::vector<IndexSet> facets() const;
  /// -1 for {∅}.
  [[nodiscard]] int dimension() const;
  [[nodiscard]] std::vector<IndexSet> faces_of_size(int k) const;

  /// Faces contained in alpha. The ground set stays [m]; the complement of
  /// alpha becomes ghost vertices.
  [[nodiscard]] SimplicialComplex full_subcomplex(IndexSet alpha) const;

  /// Faces contained in alpha, relabelled onto the ground set [|alpha|]
  /// preserving the order of the elements.
  [[nodiscard]] SimplicialComplex restriction(IndexSet alpha) const;
  /// Same faces, on a larger ground set.
  [[nodiscard]] SimplicialComplex with_ground_size(int m) const;

  /// True when every face of this complex is a face of `other`.
  [[nodiscard]] bool is_subcomplex_of(const SimplicialComplex& other) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.m_ == b.m_ && a.faces_ == b.faces_;
  }

 private:
  int m_;
  std::vector<IndexSet> faces_;
  std::unordered_set<std::uint64_t> lookup_;
};

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);

/// Complex whose vertices are labelled by faces of a source complex; vertex j
/// (1-based) carries labels[j-1]. An empty label marks a cone apex.
struct SubdividedComplex {
  SimplicialComplex complex;
  std::vector<IndexSet> labels;
};

/// A complex together with a subcomplex. `labels` is empty unless the
/// vertices are labelled by faces of a source complex.
struct SimplicialPair {
  SimplicialPair(SimplicialComplex ambient_complex, SimplicialComplex sub_complex,
                 std::vector<IndexSet> vertex_labels = {});

  SimplicialComplex ambient;
  SimplicialComplex sub;
  std::vector<IndexSet> labels;
};

/// (CΣ, Σ): the apex is the new vertex m+1.
SimplicialPair cone(const SimplicialComplex& sigma);

/// Vertices are the nonempty faces of sigma ordered by (dimension, lex);
/// faces are the flags of faces.
SubdividedComplex barycentric_subdivision(const SimplicialComplex& sigma);

/// Order complex of faces of sigma: one vertex per label (labels must be
/// faces of sigma sorted so that inclusion implies smaller position), one
/// simplex per chain under strict inclusion.
SubdividedComplex order_complex(const std::vector<IndexSet>& labels);

/// Vertex labels of the cone over the barycentric subdivision: the apex
/// (empty face) first, then the nonempty faces by (dimension, lex).
std::vector<IndexSet> cone_subdivision_labels(const SimplicialComplex& sigma);

/// Pair (CΣ', P_alpha): the cone over the barycentric subdivision (a model of
/// the simple polytope dual to sigma) and the union of the closed dual
/// blocks of the vertices in alpha, i.e. all flags whose smallest face meets
/// alpha.
SimplicialPair dual_blocks_pair(const SimplicialComplex& sigma, IndexSet alpha);

}  // namespace momentangle
