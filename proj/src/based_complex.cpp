#include "momentangle/based_complex.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <sstream>

namespace momentangle {

BasedComplex::BasedComplex(int direction, int min_degree,
                           std::vector<std::vector<BasisElement>> bases,
                           std::optional<int> truncation)
    : direction_(direction), min_degree_(min_degree), truncation_(truncation),
      bases_(std::move(bases)) {
  if (direction != kCochain && direction != kChain) {
    throw std::invalid_argument("direction must be +1 or -1");
  }
  if (bases_.empty()) bases_.emplace_back();
  label_index_.resize(bases_.size());
  differentials_.resize(bases_.size());
  for (int k = min_degree_; k <= max_degree(); ++k) {
    const auto slot = static_cast<std::size_t>(k - min_degree_);
    for (std::size_t i = 0; i < bases_[slot].size(); ++i) {
      label_index_[slot].emplace(bases_[slot][i].label, i);
    }
    differentials_[slot] = IntMatrix(rank(k + direction_), rank(k));
  }
}

int BasedComplex::trusted_max() const {
  if (truncation_) return std::min(*truncation_, max_degree()) - 1;
  return max_degree();
}

void BasedComplex::require_trusted(int degree) const {
  if (truncation_ && degree > trusted_max()) {
    std::ostringstream msg;
    msg << "degree " << degree << " is outside the trusted range (complex truncated at degree "
        << *truncation_ << ", trusted through " << trusted_max() << ")";
    throw TruncationError(msg.str());
  }
}

std::size_t BasedComplex::rank(int degree) const {
  if (!in_range(degree)) return 0;
  return bases_[static_cast<std::size_t>(degree - min_degree_)].size();
}

std::size_t BasedComplex::total_rank() const {
  std::size_t total = 0;
  for (const auto& b : bases_) total += b.size();
  return total;
}

const std::vector<BasisElement>& BasedComplex::basis(int degree) const {
  static const std::vector<BasisElement> kEmpty;
  if (!in_range(degree)) return kEmpty;
  return bases_[static_cast<std::size_t>(degree - min_degree_)];
}

bool BasedComplex::multigraded() const {
  for (const auto& b : bases_) {
    if (!b.empty()) return !b.front().multidegree.empty();
  }
  return false;
}

std::optional<std::size_t> BasedComplex::find(int degree, const std::string& label) const {
  if (!in_range(degree)) return std::nullopt;
  const auto& index = label_index_[static_cast<std::size_t>(degree - min_degree_)];
  auto it = index.find(label);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

const IntMatrix& BasedComplex::differential(int degree) const {
  static const IntMatrix kEmpty;
  if (!in_range(degree)) return kEmpty;
  return differentials_[static_cast<std::size_t>(degree - min_degree_)];
}

void BasedComplex::set_differential(int degree, IntMatrix matrix) {
  if (!in_range(degree)) throw std::out_of_range("set_differential: degree out of range");
  if (matrix.rows() != rank(degree + direction_) || matrix.cols() != rank(degree)) {
    std::ostringstream msg;
    msg << "set_differential: degree " << degree << " expects " << rank(degree + direction_)
        << "x" << rank(degree) << ", got " << matrix.rows() << "x" << matrix.cols();
    throw std::invalid_argument(msg.str());
  }
  differentials_[static_cast<std::size_t>(degree - min_degree_)] = std::move(matrix);
}

void BasedComplex::check(const CoefficientRing& coefficients) const {
  for (int k = min_degree_; k <= max_degree(); ++k) {
    const IntMatrix& d = differential(k);
    if (multigraded()) {
      const auto& source = basis(k);
      const auto& target = basis(k + direction_);
      for (std::size_t j = 0; j < d.cols(); ++j) {
        for (const auto& [i, v] : d.column(j)) {
          if (target[i].multidegree != source[j].multidegree) {
            throw std::logic_error("differential does not preserve the multigrading: " +
                                   source[j].label + " -> " + target[i].label);
          }
        }
      }
    }
    const int next = k + direction_;
    if (!in_range(next) || !in_range(next + direction_)) continue;
    IntMatrix composite = (differential(next) * d).reduced(coefficients);
    if (!composite.is_zero()) {
      std::ostringstream msg;
      msg << "d∘d != 0 starting in degree " << k;
      throw std::logic_error(msg.str());
    }
  }
}

BasedComplex dualize(const BasedComplex& complex) {
  std::vector<std::vector<BasisElement>> bases;
  for (int k = complex.min_degree(); k <= complex.max_degree(); ++k) {
    bases.push_back(complex.basis(k));
  }
  BasedComplex out(-complex.direction(), complex.min_degree(), std::move(bases),
                   complex.truncation());
  for (int k = complex.min_degree(); k <= complex.max_degree(); ++k) {
    const IntMatrix& d = complex.differential(k);
    const int target = k + complex.direction();
    if (!complex.in_range(target)) continue;
    const int low = std::min(k, target);
    const Integer sign = (low % 2 == 0) ? -1 : 1;
    out.set_differential(target, d.transpose().scaled(sign));
  }
  return out;
}

BasedComplex tensor_product(const BasedComplex& a, const BasedComplex& b,
                            std::optional<int> truncation) {
  if (a.direction() != b.direction()) {
    throw std::invalid_argument("tensor_product: factors have different directions");
  }
  const int low = a.min_degree() + b.min_degree();
  int high = a.max_degree() + b.max_degree();
  if (truncation) high = std::min(high, *truncation);
  struct Pair {
    int p;
    std::size_t i;
    std::size_t j;
  };
  std::vector<std::vector<Pair>> pairs(static_cast<std::size_t>(high - low + 1));
  std::vector<std::vector<BasisElement>> bases(pairs.size());
  std::map<std::tuple<int, int, std::size_t, std::size_t>, std::size_t> position;
  for (int k = low; k <= high; ++k) {
    auto& slot = pairs[static_cast<std::size_t>(k - low)];
    for (int p = a.min_degree(); p <= a.max_degree(); ++p) {
      const int q = k - p;
      if (!b.in_range(q)) continue;
      for (std::size_t i = 0; i < a.rank(p); ++i) {
        for (std::size_t j = 0; j < b.rank(q); ++j) {
          position[{p, q, i, j}] = slot.size();
          slot.push_back({p, i, j});
          BasisElement e;
          e.label = a.basis(p)[i].label + "|" + b.basis(q)[j].label;
          e.multidegree = a.basis(p)[i].multidegree;
          const auto& mb = b.basis(q)[j].multidegree;
          e.multidegree.insert(e.multidegree.end(), mb.begin(), mb.end());
          bases[static_cast<std::size_t>(k - low)].push_back(std::move(e));
        }
      }
    }
  }
  std::optional<int> trunc;
  if (truncation && *truncation < a.max_degree() + b.max_degree()) trunc = truncation;
  BasedComplex out(a.direction(), low, std::move(bases), trunc);
  const int dir = a.direction();
  for (int k = low; k <= high; ++k) {
    if (!out.in_range(k + dir)) continue;
    const auto& slot = pairs[static_cast<std::size_t>(k - low)];
    IntMatrix d(out.rank(k + dir), out.rank(k));
    for (std::size_t col = 0; col < slot.size(); ++col) {
      const auto [p, i, j] = slot[col];
      const int q = k - p;
      IntMatrix::Column entries;
      if (a.in_range(p + dir)) {
        for (const auto& [r, v] : a.differential(p).column(i)) {
          entries.emplace_back(position.at({p + dir, q, r, j}), v);
        }
      }
      if (b.in_range(q + dir)) {
        const Integer sign = p % 2 == 0 ? 1 : -1;
        for (const auto& [r, v] : b.differential(q).column(j)) {
          entries.emplace_back(position.at({p, q + dir, i, r}), sign * v);
        }
      }
      d.set_column(col, std::move(entries));
    }
    out.set_differential(k, std::move(d));
  }
  return out;
}

}  // namespace momentangle
