#include "momentangle/smith.hpp"

#include <stdexcept>

namespace momentangle {

SmithForm smith_normal_form(const IntMatrix& m) {
  IntegerOps ops;
  auto d = diagonalize(ops, m.to_dense(), true, true);
  SmithForm out;
  out.diagonal = IntMatrix::from_dense(d.diagonal);
  out.left = IntMatrix::from_dense(d.left);
  out.right = IntMatrix::from_dense(d.right);
  out.rank = d.rank;
  for (std::size_t i = 0; i < d.rank; ++i) out.invariant_factors.push_back(d.diagonal(i, i));
  return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  IntegerOps ops;
  auto d = diagonalize(ops, m.to_dense(), false, false);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < d.rank; ++i) out.push_back(d.diagonal(i, i));
  return out;
}

std::size_t rank_over(const IntMatrix& m, const CoefficientRing& field) {
  switch (field.kind()) {
    case CoefficientRing::Kind::Integers:
    case CoefficientRing::Kind::Rationals: {
      RationalOps ops;
      return diagonalize(ops, convert(ops, m.to_dense()), false, false).rank;
    }
    case CoefficientRing::Kind::PrimeField: {
      PrimeFieldOps ops(field.characteristic());
      return diagonalize(ops, convert(ops, m.to_dense()), false, false).rank;
    }
  }
  throw std::logic_error("unknown coefficient ring");
}

std::optional<IntVector> solve_with_image(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_with_image: size mismatch");
  return solve(IntegerOps{}, a.to_dense(), b);
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  IntegerOps ops;
  auto d = diagonalize(ops, m.to_dense(), false, true);
  std::vector<IntVector> out;
  for (std::size_t j = d.rank; j < m.cols(); ++j) {
    IntVector v(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) v[i] = d.right(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  // Bareiss elimination.
  auto a = m.to_dense();
  const std::size_t n = a.rows();
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = v;
      }
    }
    previous = a(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * a(n - 1, n - 1));
}

std::vector<Integer> canonical_torsion(const std::vector<Integer>& orders) {
  DenseMatrix<Integer> diag(orders.size(), orders.size(), Integer(0));
  for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
  IntegerOps ops;
  auto d = diagonalize(ops, std::move(diag), false, false);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < d.rank; ++i) {
    if (d.diagonal(i, i) != 1) out.push_back(d.diagonal(i, i));
  }
  return out;
}

}  // namespace momentangle
