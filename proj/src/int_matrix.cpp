#include "momentangle/int_matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace momentangle {

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
    std::size_t j = 0;
    for (long v : row) {
      if (v != 0) m.columns_[j].emplace_back(i, Integer(v));
      ++j;
    }
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::from_dense(const DenseMatrix<Integer>& dense) {
  IntMatrix m(dense.rows(), dense.cols());
  for (std::size_t j = 0; j < dense.cols(); ++j) {
    for (std::size_t i = 0; i < dense.rows(); ++i) {
      if (dense(i, j) != 0) m.columns_[j].emplace_back(i, dense(i, j));
    }
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace_back(i, Integer(1));
  return m;
}

void IntMatrix::set_column(std::size_t j, Column entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Column merged;
  merged.reserve(entries.size());
  for (auto& e : entries) {
    if (e.first >= rows_) throw std::out_of_range("set_column: row index out of range");
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Entry& e) { return e.second == 0; }),
               merged.end());
  columns_[j] = std::move(merged);
}

void IntMatrix::add_to(std::size_t r, std::size_t c, const Integer& value) {
  if (r >= rows_ || c >= cols()) throw std::out_of_range("add_to: index out of range");
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    it->second += value;
    if (it->second == 0) col.erase(it);
  } else if (value != 0) {
    col.insert(it, Entry(r, value));
  }
}

Integer IntMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) return it->second;
  return 0;
}

std::size_t IntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols()) throw std::invalid_argument("apply: dimension mismatch");
  IntVector y(rows_, Integer(0));
  for (std::size_t j = 0; j < cols(); ++j) {
    if (x[j] == 0) continue;
    for (const auto& [i, v] : columns_[j]) y[i] += v * x[j];
  }
  return y;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols(), rows_);
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& [i, v] : columns_[j]) t.columns_[i].emplace_back(j, v);
  }
  return t;
}

IntMatrix IntMatrix::scaled(const Integer& factor) const {
  IntMatrix s(rows_, cols());
  if (factor == 0) return s;
  for (std::size_t j = 0; j < cols(); ++j) {
    s.columns_[j] = columns_[j];
    for (auto& e : s.columns_[j]) e.second *= factor;
  }
  return s;
}

IntMatrix IntMatrix::reduced(const CoefficientRing& ring) const {
  IntMatrix r(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& [i, v] : columns_[j]) {
      Integer w = ring.reduce(v);
      if (w != 0) r.columns_[j].emplace_back(i, std::move(w));
    }
  }
  return r;
}

DenseMatrix<Integer> IntMatrix::to_dense() const {
  DenseMatrix<Integer> d(rows_, cols(), Integer(0));
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& [i, v] : columns_[j]) d(i, j) = v;
  }
  return d;
}

DenseMatrix<Integer> IntMatrix::dense_block(const std::vector<std::size_t>& row_ids,
                                            const std::vector<std::size_t>& col_ids) const {
  DenseMatrix<Integer> d(row_ids.size(), col_ids.size(), Integer(0));
  if (row_ids.empty() || col_ids.empty()) return d;
  std::vector<std::ptrdiff_t> local(rows_, -1);
  for (std::size_t a = 0; a < row_ids.size(); ++a) local[row_ids[a]] = static_cast<std::ptrdiff_t>(a);
  for (std::size_t b = 0; b < col_ids.size(); ++b) {
    for (const auto& [i, v] : columns_[col_ids[b]]) {
      if (local[i] >= 0) d(static_cast<std::size_t>(local[i]), b) = v;
    }
  }
  return d;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::map<std::size_t, Integer> acc;
    for (const auto& [k, bv] : b.column(j)) {
      for (const auto& [i, av] : a.column(k)) acc[i] += av * bv;
    }
    IntMatrix::Column col;
    for (auto& [i, v] : acc) {
      if (v != 0) col.emplace_back(i, std::move(v));
    }
    c.columns_[j] = std::move(col);
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sum: dimension mismatch");
  }
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    IntMatrix::Column col = a.column(j);
    col.insert(col.end(), b.column(j).begin(), b.column(j).end());
    c.set_column(j, std::move(col));
  }
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + b.scaled(-1); }

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  const auto d = to_dense();
  os << "[";
  for (std::size_t i = 0; i < d.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < d.cols(); ++j) os << (j ? " " : "") << d(i, j).get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace momentangle
