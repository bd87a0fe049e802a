#include "momentangle/simplicial_complex.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace momentangle {

namespace {

void check_ground_size(int m) {
  if (m < 0 || m > IndexSet::kMaxElement - 1) {
    throw std::invalid_argument("ground set size must be in 0..63, got " + std::to_string(m));
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int m, std::vector<IndexSet> faces) : m_(m) {
  check_ground_size(m);
  const IndexSet ground = IndexSet::range(m);
  for (IndexSet f : faces) {
    if (!f.is_subset_of(ground)) {
      throw std::invalid_argument("face " + f.to_string() + " not contained in [" +
                                  std::to_string(m) + "]");
    }
    lookup_.insert(f.bits());
  }
  lookup_.insert(0);
  for (std::uint64_t bits : lookup_) {
    const IndexSet f(bits);
    for (int i : f.elements()) {
      if (lookup_.count(f.without(i).bits()) == 0) {
        throw std::invalid_argument("face set is not closed under taking subsets: " +
                                    f.to_string());
      }
    }
  }
  faces_.reserve(lookup_.size());
  for (std::uint64_t bits : lookup_) faces_.emplace_back(bits);
  std::sort(faces_.begin(), faces_.end(), graded_lex_less);
}

SimplicialComplex SimplicialComplex::from_facets(int m, const std::vector<IndexSet>& facets) {
  check_ground_size(m);
  const IndexSet ground = IndexSet::range(m);
  std::unordered_set<std::uint64_t> seen{0};
  std::vector<IndexSet> stack;
  for (IndexSet f : facets) {
    if (!f.is_subset_of(ground)) {
      throw std::invalid_argument("facet element out of range 1.." + std::to_string(m) + ": " +
                                  f.to_string());
    }
    if (seen.insert(f.bits()).second) stack.push_back(f);
  }
  while (!stack.empty()) {
    const IndexSet f = stack.back();
    stack.pop_back();
    for (int i : f.elements()) {
      const IndexSet g = f.without(i);
      if (seen.insert(g.bits()).second) stack.push_back(g);
    }
  }
  std::vector<IndexSet> faces;
  faces.reserve(seen.size());
  for (std::uint64_t b : seen) faces.emplace_back(b);
  return {m, std::move(faces)};
}

SimplicialComplex SimplicialComplex::from_facet_lists(int m,
                                                      const std::vector<std::vector<int>>& facets) {
  check_ground_size(m);
  std::vector<IndexSet> sets;
  sets.reserve(facets.size());
  for (const auto& f : facets) {
    for (int i : f) {
      if (i < 1 || i > m) {
        throw std::invalid_argument("facet element " + std::to_string(i) + " out of range 1.." +
                                    std::to_string(m));
      }
    }
    sets.emplace_back(f);
  }
  return from_facets(m, sets);
}

SimplicialComplex SimplicialComplex::simplex(int m) { return from_facets(m, {IndexSet::range(m)}); }

SimplicialComplex SimplicialComplex::simplex_boundary(int m) {
  std::vector<IndexSet> facets;
  for (int i = 1; i <= m; ++i) facets.push_back(IndexSet::range(m).without(i));
  return from_facets(m, facets);
}

SimplicialComplex SimplicialComplex::empty(int m) { return from_facets(m, std::vector<IndexSet>{}); }

IndexSet SimplicialComplex::vertex_set() const {
  IndexSet v;
  for (IndexSet f : faces_) v = v | f;
  return v;
}

std::vector<IndexSet> SimplicialComplex::facets() const {
  std::vector<IndexSet> out;
  for (IndexSet f : faces_) {
    bool maximal = true;
    for (int i = 1; i <= m_ && maximal; ++i) {
      if (!f.contains(i) && contains(f.with(i))) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

int SimplicialComplex::dimension() const { return faces_.back().size() - 1; }

std::vector<IndexSet> SimplicialComplex::faces_of_size(int k) const {
  std::vector<IndexSet> out;
  for (IndexSet f : faces_) {
    if (f.size() == k) out.push_back(f);
  }
  return out;
}

SimplicialComplex SimplicialComplex::full_subcomplex(IndexSet alpha) const {
  std::vector<IndexSet> kept;
  for (IndexSet f : faces_) {
    if (f.is_subset_of(alpha)) kept.push_back(f);
  }
  return {m_, std::move(kept)};
}

SimplicialComplex SimplicialComplex::restriction(IndexSet alpha) const {
  if (!alpha.is_subset_of(IndexSet::range(m_))) {
    throw std::invalid_argument("restriction: " + alpha.to_string() + " not contained in [" +
                                std::to_string(m_) + "]");
  }
  std::vector<IndexSet> kept;
  for (IndexSet f : faces_) {
    if (!f.is_subset_of(alpha)) continue;
    IndexSet relabelled;
    for (int i : f.elements()) relabelled = relabelled.with(alpha.count_below(i) + 1);
    kept.push_back(relabelled);
  }
  return {alpha.size(), std::move(kept)};
}

SimplicialComplex SimplicialComplex::with_ground_size(int m) const {
  return {m, faces_};
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::all_of(faces_.begin(), faces_.end(),
                     [&](IndexSet f) { return other.contains(f); });
}

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<IndexSet> faces;
  for (IndexSet f : a.faces()) {
    if (b.contains(f)) faces.push_back(f);
  }
  return {std::max(a.ground_size(), b.ground_size()), std::move(faces)};
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<IndexSet> faces = a.faces();
  for (IndexSet f : b.faces()) {
    if (!a.contains(f)) faces.push_back(f);
  }
  return {std::max(a.ground_size(), b.ground_size()), std::move(faces)};
}

SimplicialPair::SimplicialPair(SimplicialComplex ambient_complex, SimplicialComplex sub_complex,
                               std::vector<IndexSet> vertex_labels)
    : ambient(std::move(ambient_complex)),
      sub(std::move(sub_complex)),
      labels(std::move(vertex_labels)) {
  if (!sub.is_subcomplex_of(ambient)) {
    throw std::invalid_argument("pair: subcomplex is not contained in the ambient complex");
  }
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(ambient.ground_size())) {
    throw std::invalid_argument("pair: label count does not match the ground set");
  }
}

SimplicialPair cone(const SimplicialComplex& sigma) {
  const int m = sigma.ground_size();
  const int apex = m + 1;
  std::vector<IndexSet> faces;
  faces.reserve(2 * sigma.faces().size());
  for (IndexSet f : sigma.faces()) {
    faces.push_back(f);
    faces.push_back(f.with(apex));
  }
  return {SimplicialComplex(m + 1, std::move(faces)), sigma.with_ground_size(m + 1)};
}

SubdividedComplex order_complex(const std::vector<IndexSet>& labels) {
  const int n = static_cast<int>(labels.size());
  if (n < 1 || n > IndexSet::kMaxElement - 1) {
    throw std::length_error("order complex needs between 1 and 63 vertices, got " +
                            std::to_string(n));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < a; ++b) {
      if (labels[static_cast<std::size_t>(a)].is_subset_of(labels[static_cast<std::size_t>(b)]) &&
          labels[static_cast<std::size_t>(a)] != labels[static_cast<std::size_t>(b)]) {
        throw std::invalid_argument("order complex: labels are not sorted compatibly with inclusion");
      }
    }
  }
  std::vector<IndexSet> faces{IndexSet{}};
  std::function<void(int, IndexSet)> extend = [&](int last, IndexSet chain) {
    for (int w = last + 1; w < n; ++w) {
      const IndexSet top = labels[static_cast<std::size_t>(last)];
      const IndexSet next = labels[static_cast<std::size_t>(w)];
      if (top.is_subset_of(next) && top != next) {
        const IndexSet grown = chain.with(w + 1);
        faces.push_back(grown);
        extend(w, grown);
      }
    }
  };
  for (int v = 0; v < n; ++v) {
    const IndexSet start = IndexSet::singleton(v + 1);
    faces.push_back(start);
    extend(v, start);
  }
  return {SimplicialComplex(n, std::move(faces)), labels};
}

SubdividedComplex barycentric_subdivision(const SimplicialComplex& sigma) {
  std::vector<IndexSet> labels;
  for (IndexSet f : sigma.faces()) {
    if (!f.empty()) labels.push_back(f);
  }
  if (labels.empty()) {
    // Subdivision of {∅} is {∅}; keep a one-point ground set with a ghost.
    return {SimplicialComplex::empty(1), {}};
  }
  return order_complex(labels);
}

std::vector<IndexSet> cone_subdivision_labels(const SimplicialComplex& sigma) {
  return sigma.faces();  // graded-lex order puts ∅ first
}

SimplicialPair dual_blocks_pair(const SimplicialComplex& sigma, IndexSet alpha) {
  if (!alpha.is_subset_of(IndexSet::range(sigma.ground_size()))) {
    throw std::invalid_argument("dual_blocks_pair: alpha " + alpha.to_string() +
                                " not contained in the ground set");
  }
  const auto labels = cone_subdivision_labels(sigma);
  SubdividedComplex cone_complex = order_complex(labels);
  std::vector<IndexSet> block_faces;
  for (IndexSet flag : cone_complex.complex.faces()) {
    if (flag.empty()) {
      block_faces.push_back(flag);
      continue;
    }
    const int lowest = flag.elements().front();
    if (labels[static_cast<std::size_t>(lowest - 1)].intersects(alpha)) block_faces.push_back(flag);
  }
  SimplicialComplex blocks(cone_complex.complex.ground_size(), std::move(block_faces));
  return {std::move(cone_complex.complex), std::move(blocks), labels};
}

}  // namespace momentangle
