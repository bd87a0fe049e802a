#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "momentangle/int_matrix.hpp"

namespace momentangle {

/// Arithmetic of ℤ for the elimination kernels.
struct IntegerOps {
  using value_type = Integer;
  static constexpr bool kNeedsDivisibility = true;

  [[nodiscard]] Integer zero() const { return 0; }
  [[nodiscard]] Integer one() const { return 1; }
  [[nodiscard]] Integer from_integer(const Integer& v) const { return v; }
  [[nodiscard]] Integer to_integer(const Integer& v) const { return v; }
  [[nodiscard]] bool is_zero(const Integer& v) const { return v == 0; }
  [[nodiscard]] bool is_unit(const Integer& v) const { return v == 1 || v == -1; }
  /// a strictly better pivot than b
  [[nodiscard]] bool better_pivot(const Integer& a, const Integer& b) const {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
  }
  /// q with |a + q b| < |b|
  [[nodiscard]] Integer negated_quotient(const Integer& a, const Integer& b) const {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return -q;
  }
  [[nodiscard]] bool divides(const Integer& d, const Integer& a) const {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
  }
  /// Unit u such that u * a is the canonical associate of a.
  [[nodiscard]] Integer normalizer(const Integer& a) const { return a < 0 ? -1 : 1; }
  [[nodiscard]] Integer inverse(const Integer& unit) const { return unit; }
  [[nodiscard]] Integer exact_quotient(const Integer& a, const Integer& d) const {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
  }
  void axpy(Integer& y, const Integer& q, const Integer& x) const { y += q * x; }
  [[nodiscard]] Integer mul(const Integer& a, const Integer& b) const { return a * b; }
  [[nodiscard]] Integer add(const Integer& a, const Integer& b) const { return a + b; }
};

/// Arithmetic of ℤ/p with p < 2^31.
struct PrimeFieldOps {
  using value_type = std::int64_t;
  static constexpr bool kNeedsDivisibility = false;

  explicit PrimeFieldOps(std::int64_t prime) : p(prime) {}
  std::int64_t p;

  [[nodiscard]] std::int64_t zero() const { return 0; }
  [[nodiscard]] std::int64_t one() const { return 1; }
  [[nodiscard]] std::int64_t from_integer(const Integer& v) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_si();
  }
  [[nodiscard]] Integer to_integer(std::int64_t v) const { return Integer(static_cast<long>(v)); }
  [[nodiscard]] bool is_zero(std::int64_t v) const { return v == 0; }
  [[nodiscard]] bool is_unit(std::int64_t v) const { return v != 0; }
  [[nodiscard]] bool better_pivot(std::int64_t, std::int64_t) const { return false; }
  [[nodiscard]] std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p; }
  [[nodiscard]] std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p; }
  [[nodiscard]] std::int64_t inverse(std::int64_t a) const {
    std::int64_t result = 1;
    std::int64_t base = a % p;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
  [[nodiscard]] std::int64_t negated_quotient(std::int64_t a, std::int64_t b) const {
    return (p - mul(a, inverse(b))) % p;
  }
  [[nodiscard]] bool divides(std::int64_t d, std::int64_t) const { return d != 0; }
  [[nodiscard]] std::int64_t normalizer(std::int64_t a) const { return inverse(a); }
  [[nodiscard]] std::int64_t exact_quotient(std::int64_t a, std::int64_t d) const {
    return mul(a, inverse(d));
  }
  void axpy(std::int64_t& y, std::int64_t q, std::int64_t x) const { y = (y + q * x) % p; }
};

/// Arithmetic of ℚ.
struct RationalOps {
  using value_type = mpq_class;
  static constexpr bool kNeedsDivisibility = false;

  [[nodiscard]] mpq_class zero() const { return 0; }
  [[nodiscard]] mpq_class one() const { return 1; }
  [[nodiscard]] mpq_class from_integer(const Integer& v) const { return mpq_class(v); }
  [[nodiscard]] bool is_zero(const mpq_class& v) const { return v == 0; }
  [[nodiscard]] bool is_unit(const mpq_class& v) const { return v != 0; }
  [[nodiscard]] bool better_pivot(const mpq_class&, const mpq_class&) const { return false; }
  [[nodiscard]] mpq_class negated_quotient(const mpq_class& a, const mpq_class& b) const {
    return -a / b;
  }
  [[nodiscard]] bool divides(const mpq_class& d, const mpq_class&) const { return d != 0; }
  [[nodiscard]] mpq_class normalizer(const mpq_class& a) const { return 1 / a; }
  [[nodiscard]] mpq_class inverse(const mpq_class& a) const { return 1 / a; }
  [[nodiscard]] mpq_class exact_quotient(const mpq_class& a, const mpq_class& d) const {
    return a / d;
  }
  void axpy(mpq_class& y, const mpq_class& q, const mpq_class& x) const { y += q * x; }
  [[nodiscard]] mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
  [[nodiscard]] mpq_class add(const mpq_class& a, const mpq_class& b) const { return a + b; }
};

/// U·M·V = D with D diagonal. Over ℤ the diagonal entries are the invariant
/// factors (positive, each dividing the next); over a field they are 1.
template <class Ops>
struct Diagonalization {
  using Value = typename Ops::value_type;
  DenseMatrix<Value> diagonal;
  DenseMatrix<Value> left;           // U
  DenseMatrix<Value> left_inverse;   // U^-1
  DenseMatrix<Value> right;          // V
  DenseMatrix<Value> right_inverse;  // V^-1
  std::size_t rank = 0;
};

namespace detail {

template <class Ops>
class Diagonalizer {
 public:
  using Value = typename Ops::value_type;

  Diagonalizer(const Ops& ops, DenseMatrix<Value> m, bool track_left, bool track_right)
      : ops_(ops), track_left_(track_left), track_right_(track_right) {
    out_.diagonal = std::move(m);
    const std::size_t r = out_.diagonal.rows();
    const std::size_t c = out_.diagonal.cols();
    if (track_left_) {
      out_.left = DenseMatrix<Value>::identity(r, ops_.zero(), ops_.one());
      out_.left_inverse = out_.left;
    }
    if (track_right_) {
      out_.right = DenseMatrix<Value>::identity(c, ops_.zero(), ops_.one());
      out_.right_inverse = out_.right;
    }
  }

  Diagonalization<Ops> run() {
    auto& a = out_.diagonal;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t t = 0;
    while (t < rows && t < cols) {
      auto pivot = find_pivot(t);
      if (!pivot) break;
      row_swap(t, pivot->first);
      col_swap(t, pivot->second);
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (ops_.is_zero(a(i, t))) continue;
          row_axpy(i, t, ops_.negated_quotient(a(i, t), a(t, t)));
          if (!ops_.is_zero(a(i, t))) {
            row_swap(t, i);
            clean = false;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (ops_.is_zero(a(t, j))) continue;
          col_axpy(j, t, ops_.negated_quotient(a(t, j), a(t, t)));
          if (!ops_.is_zero(a(t, j))) {
            col_swap(t, j);
            clean = false;
          }
        }
        if (!clean) continue;
        if constexpr (Ops::kNeedsDivisibility) {
          bool fixed = false;
          for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
            for (std::size_t j = t + 1; j < cols && !fixed; ++j) {
              if (!ops_.is_zero(a(i, j)) && !ops_.divides(a(t, t), a(i, j))) {
                row_axpy(t, i, ops_.one());
                fixed = true;
              }
            }
          }
          if (fixed) continue;
        }
        break;
      }
      const Value u = ops_.normalizer(a(t, t));
      row_scale(t, u, ops_.inverse(u));
      ++t;
    }
    out_.rank = t;
    return std::move(out_);
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t t) const {
    const auto& a = out_.diagonal;
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a.rows(); ++i) {
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (ops_.is_zero(a(i, j))) continue;
        if (!best || ops_.better_pivot(a(i, j), a(best->first, best->second))) {
          best = std::make_pair(i, j);
          if (ops_.is_unit(a(i, j))) return best;
        }
      }
    }
    return best;
  }

  // row_i += q row_t
  void row_axpy(std::size_t i, std::size_t t, const Value& q) {
    auto& a = out_.diagonal;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!ops_.is_zero(a(t, c))) ops_.axpy(a(i, c), q, a(t, c));
    }
    if (track_left_) {
      auto& u = out_.left;
      for (std::size_t c = 0; c < u.cols(); ++c) {
        if (!ops_.is_zero(u(t, c))) ops_.axpy(u(i, c), q, u(t, c));
      }
      // U^-1: col_t -= q col_i
      auto& ui = out_.left_inverse;
      const Value minus_q = ops_.mul(q, ops_.from_integer(Integer(-1)));
      for (std::size_t r = 0; r < ui.rows(); ++r) {
        if (!ops_.is_zero(ui(r, i))) ops_.axpy(ui(r, t), minus_q, ui(r, i));
      }
    }
  }

  // col_j += q col_t
  void col_axpy(std::size_t j, std::size_t t, const Value& q) {
    auto& a = out_.diagonal;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (!ops_.is_zero(a(r, t))) ops_.axpy(a(r, j), q, a(r, t));
    }
    if (track_right_) {
      auto& v = out_.right;
      for (std::size_t r = 0; r < v.rows(); ++r) {
        if (!ops_.is_zero(v(r, t))) ops_.axpy(v(r, j), q, v(r, t));
      }
      // V^-1: row_t -= q row_j
      auto& vi = out_.right_inverse;
      const Value minus_q = ops_.mul(q, ops_.from_integer(Integer(-1)));
      for (std::size_t c = 0; c < vi.cols(); ++c) {
        if (!ops_.is_zero(vi(j, c))) ops_.axpy(vi(t, c), minus_q, vi(j, c));
      }
    }
  }

  void row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    out_.diagonal.swap_rows(a, b);
    if (track_left_) {
      out_.left.swap_rows(a, b);
      out_.left_inverse.swap_cols(a, b);
    }
  }

  void col_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    out_.diagonal.swap_cols(a, b);
    if (track_right_) {
      out_.right.swap_cols(a, b);
      out_.right_inverse.swap_rows(a, b);
    }
  }

  void row_scale(std::size_t i, const Value& u, const Value& u_inverse) {
    if (u == ops_.one()) return;
    auto& a = out_.diagonal;
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = ops_.mul(a(i, c), u);
    if (track_left_) {
      for (std::size_t c = 0; c < out_.left.cols(); ++c) out_.left(i, c) = ops_.mul(out_.left(i, c), u);
      auto& ui = out_.left_inverse;
      for (std::size_t r = 0; r < ui.rows(); ++r) ui(r, i) = ops_.mul(ui(r, i), u_inverse);
    }
  }

  const Ops& ops_;
  bool track_left_;
  bool track_right_;
  Diagonalization<Ops> out_;
};

}  // namespace detail

template <class Ops>
Diagonalization<Ops> diagonalize(const Ops& ops, DenseMatrix<typename Ops::value_type> m,
                                 bool track_left, bool track_right) {
  return detail::Diagonalizer<Ops>(ops, std::move(m), track_left, track_right).run();
}

template <class Ops>
DenseMatrix<typename Ops::value_type> convert(const Ops& ops, const DenseMatrix<Integer>& m) {
  DenseMatrix<typename Ops::value_type> out(m.rows(), m.cols(), ops.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ops.from_integer(m(i, j));
  }
  return out;
}

template <class Ops>
DenseMatrix<typename Ops::value_type> multiply(const Ops& ops,
                                               const DenseMatrix<typename Ops::value_type>& a,
                                               const DenseMatrix<typename Ops::value_type>& b) {
  DenseMatrix<typename Ops::value_type> c(a.rows(), b.cols(), ops.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ops.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!ops.is_zero(b(k, j))) ops.axpy(c(i, j), a(i, k), b(k, j));
      }
    }
  }
  return c;
}

/// x with A x = b, if one exists.
template <class Ops>
std::optional<std::vector<typename Ops::value_type>> solve(
    const Ops& ops, const DenseMatrix<typename Ops::value_type>& a,
    const std::vector<typename Ops::value_type>& b) {
  using Value = typename Ops::value_type;
  auto d = diagonalize(ops, a, true, true);
  std::vector<Value> c(a.rows(), ops.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.rows(); ++k) {
      if (!ops.is_zero(d.left(i, k)) && !ops.is_zero(b[k])) ops.axpy(c[i], d.left(i, k), b[k]);
    }
  }
  std::vector<Value> y(a.cols(), ops.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < d.rank) {
      if (!ops.divides(d.diagonal(i, i), c[i])) return std::nullopt;
      y[i] = ops.exact_quotient(c[i], d.diagonal(i, i));
    } else if (!ops.is_zero(c[i])) {
      return std::nullopt;
    }
  }
  std::vector<Value> x(a.cols(), ops.zero());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t k = 0; k < d.rank; ++k) {
      if (!ops.is_zero(d.right(i, k)) && !ops.is_zero(y[k])) ops.axpy(x[i], d.right(i, k), y[k]);
    }
  }
  return x;
}

/// Smith normal form over ℤ: U·M·V = S with U, V unimodular.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
  std::size_t rank = 0;
  /// Nonzero diagonal entries d1 | d2 | ...
  std::vector<Integer> invariant_factors;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Invariant factors only (no transforms).
std::vector<Integer> invariant_factors(const IntMatrix& m);

/// Rank over ℚ or ℤ/p.
std::size_t rank_over(const IntMatrix& m, const CoefficientRing& field);

/// Integer solution of A x = b, if one exists.
std::optional<IntVector> solve_with_image(const IntMatrix& a, const IntVector& b);

/// Basis of the integer kernel {x : M x = 0} (a saturated lattice).
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Determinant of a square integer matrix (fraction-free elimination).
Integer determinant(const IntMatrix& m);

/// Invariant factors (all ≥ 2) of the finite abelian group ⊕ ℤ/orders[i].
std::vector<Integer> canonical_torsion(const std::vector<Integer>& orders);

}  // namespace momentangle
