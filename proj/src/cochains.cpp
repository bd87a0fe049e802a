#include "momentangle/cochains.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace momentangle {

namespace {

std::string sequence_label(const std::vector<int>& seq) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? "," : "") << seq[i];
  out << ']';
  return out.str();
}

// Sign of the permutation sorting `values` increasingly; 0 on repeats.
int sort_sign(std::vector<int>& values) {
  int sign = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    for (std::size_t j = i; j > 0 && values[j - 1] >= values[j]; --j) {
      if (values[j - 1] == values[j]) return 0;
      std::swap(values[j - 1], values[j]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

CochainModel::CochainModel(const SimplicialPair& pair, std::vector<int> vertex_order)
    : pair_(pair), order_(std::move(vertex_order)) {
  const int m = pair_.ambient.ground_size();
  if (order_.empty()) {
    order_.resize(static_cast<std::size_t>(m));
    std::iota(order_.begin(), order_.end(), 1);
  }
  if (order_.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("vertex order must list every vertex of the ground set");
  }
  position_.assign(static_cast<std::size_t>(m) + 1, -1);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const int v = order_[i];
    if (v < 1 || v > m || position_[static_cast<std::size_t>(v)] != -1) {
      throw std::invalid_argument("vertex order is not a permutation of the ground set");
    }
    position_[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }

  const int top = pair_.ambient.dimension();
  const std::size_t degrees = top < 0 ? 1 : static_cast<std::size_t>(top) + 1;
  simplices_.resize(degrees);
  index_.resize(degrees);
  std::vector<std::vector<BasisElement>> bases(degrees);
  for (IndexSet face : pair_.ambient.faces()) {
    if (face.empty() || pair_.sub.contains(face)) continue;
    const auto k = static_cast<std::size_t>(face.size() - 1);
    std::vector<int> seq = face.elements();
    std::sort(seq.begin(), seq.end(), [&](int a, int b) {
      return position_[static_cast<std::size_t>(a)] < position_[static_cast<std::size_t>(b)];
    });
    index_[k].emplace(face.bits(), simplices_[k].size());
    bases[k].push_back({sequence_label(seq), {}});
    simplices_[k].push_back(std::move(seq));
  }

  BasedComplex chains(BasedComplex::kChain, 0, bases);
  for (std::size_t k = 1; k < degrees; ++k) {
    IntMatrix boundary(simplices_[k - 1].size(), simplices_[k].size());
    for (std::size_t j = 0; j < simplices_[k].size(); ++j) {
      const auto& seq = simplices_[k][j];
      IntMatrix::Column column;
      IndexSet all(0);
      for (int v : seq) all = all.with(v);
      for (std::size_t i = 0; i < seq.size(); ++i) {
        auto it = index_[k - 1].find(all.without(seq[i]).bits());
        if (it == index_[k - 1].end()) continue;
        column.emplace_back(it->second, Integer(i % 2 == 0 ? 1 : -1));
      }
      boundary.set_column(j, std::move(column));
    }
    chains.set_differential(static_cast<int>(k), std::move(boundary));
  }
  complex_ = dualize(chains);
  complex_.check();
}

const std::vector<int>& CochainModel::simplex(int degree, std::size_t index) const {
  return simplices_.at(static_cast<std::size_t>(degree)).at(index);
}

std::optional<std::size_t> CochainModel::index_of(int degree, IndexSet vertices) const {
  if (degree < 0 || static_cast<std::size_t>(degree) >= index_.size()) return std::nullopt;
  const auto& index = index_[static_cast<std::size_t>(degree)];
  auto it = index.find(vertices.bits());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

IntVector CochainModel::cup(const IntVector& a, int p, const IntVector& b, int q) const {
  return cup(*this, a, p, *this, b, q);
}

IntVector CochainModel::cup(const CochainModel& left, const IntVector& a, int p,
                            const CochainModel& right, const IntVector& b, int q) const {
  if (left.order_ != order_ || right.order_ != order_) {
    throw std::invalid_argument("cup: models use different vertex orders");
  }
  const int degree = p + q;
  IntVector out(complex_.rank(degree), Integer(0));
  const Integer sign = (p * q) % 2 == 0 ? 1 : -1;
  for (std::size_t s = 0; s < out.size(); ++s) {
    const auto& seq = simplex(degree, s);
    IndexSet front(0);
    IndexSet back(0);
    for (int i = 0; i <= p; ++i) front = front.with(seq[static_cast<std::size_t>(i)]);
    for (int i = p; i <= degree; ++i) back = back.with(seq[static_cast<std::size_t>(i)]);
    auto fi = left.index_of(p, front);
    auto bi = right.index_of(q, back);
    if (!fi || !bi) continue;
    const Integer& x = a[*fi];
    const Integer& y = b[*bi];
    if (x == 0 || y == 0) continue;
    out[s] = sign * x * y;
  }
  return out;
}

IntVector CochainModel::pullback(const CochainModel& target, const std::vector<int>& vertex_map,
                                 const IntVector& c, int degree) const {
  return pullback_matrix(target, vertex_map, degree).apply(c);
}

IntMatrix CochainModel::pullback_matrix(const CochainModel& target,
                                        const std::vector<int>& vertex_map, int degree) const {
  const std::size_t rows = complex_.rank(degree);
  const std::size_t cols = target.complex_.rank(degree);
  std::vector<IntMatrix::Column> by_target(cols);
  for (std::size_t s = 0; s < rows; ++s) {
    const auto& seq = simplex(degree, s);
    std::vector<int> image_positions;
    IndexSet image(0);
    for (int v : seq) {
      const int w = vertex_map.at(static_cast<std::size_t>(v));
      image = image.with(w);
      image_positions.push_back(target.position_.at(static_cast<std::size_t>(w)));
    }
    const int sign = sort_sign(image_positions);
    if (sign == 0) continue;
    auto idx = target.index_of(degree, image);
    if (!idx) continue;
    by_target[*idx].emplace_back(s, Integer(sign));
  }
  // (f^* c)(σ) = c(f σ): row σ, column f σ.
  IntMatrix out(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) out.set_column(j, std::move(by_target[j]));
  return out;
}

BasedComplex relative_cochain_complex(const SimplicialPair& pair) {
  return CochainModel(pair).complex();
}

BasedComplex augmented_cochain_complex(const SimplicialComplex& sigma) {
  const int top = sigma.dimension();
  const std::size_t degrees = static_cast<std::size_t>(top + 2);  // -1 .. top
  std::vector<std::vector<BasisElement>> bases(degrees);
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> index(degrees);
  std::vector<std::vector<IndexSet>> faces(degrees);
  for (IndexSet face : sigma.faces()) {
    const auto slot = static_cast<std::size_t>(face.size());
    index[slot].emplace(face.bits(), faces[slot].size());
    faces[slot].push_back(face);
    bases[slot].push_back({sequence_label(face.elements()), {}});
  }
  BasedComplex chains(BasedComplex::kChain, -1, bases);
  for (std::size_t slot = 1; slot < degrees; ++slot) {
    IntMatrix boundary(faces[slot - 1].size(), faces[slot].size());
    for (std::size_t j = 0; j < faces[slot].size(); ++j) {
      IntMatrix::Column column;
      const auto elements = faces[slot][j].elements();
      for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto row = index[slot - 1].at(faces[slot][j].without(elements[i]).bits());
        column.emplace_back(row, Integer(i % 2 == 0 ? 1 : -1));
      }
      boundary.set_column(j, std::move(column));
    }
    chains.set_differential(static_cast<int>(slot) - 1, std::move(boundary));
  }
  BasedComplex out = dualize(chains);
  out.check();
  return out;
}

std::vector<CohomologyGroup> reduced_cohomology(const SimplicialComplex& sigma,
                                                const CoefficientRing& coefficients) {
  HomologyEngine engine(augmented_cochain_complex(sigma), coefficients);
  std::vector<CohomologyGroup> out;
  for (int k = -1; k <= sigma.dimension(); ++k) out.push_back(engine.group(k));
  return out;
}

std::vector<CohomologyGroup> relative_cohomology(const SimplicialPair& pair,
                                                 const CoefficientRing& coefficients) {
  HomologyEngine engine(relative_cochain_complex(pair), coefficients);
  std::vector<CohomologyGroup> out;
  for (int k = 0; k <= engine.complex().max_degree(); ++k) out.push_back(engine.group(k));
  return out;
}

}  // namespace momentangle
