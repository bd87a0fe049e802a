#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace momentangle {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Coefficients for homology: ℤ, ℚ or ℤ/p.
class CoefficientRing {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static CoefficientRing integers() { return {Kind::Integers, 0}; }
  static CoefficientRing rationals() { return {Kind::Rationals, 0}; }
  /// Throws std::invalid_argument unless p is prime.
  static CoefficientRing prime_field(std::int64_t p);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] std::int64_t characteristic() const { return p_; }
  [[nodiscard]] bool is_field() const { return kind_ != Kind::Integers; }
  /// "Z", "Q", "Z/2"
  [[nodiscard]] std::string name() const;

  /// Canonical representative of `value` in this ring: unchanged over ℤ and
  /// ℚ, reduced into [0, p) over ℤ/p.
  [[nodiscard]] Integer reduce(const Integer& value) const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  CoefficientRing(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::int64_t p_;
};

bool is_prime(std::int64_t p);

/// Fits in int64: returns the value, otherwise throws std::overflow_error.
std::int64_t to_int64(const Integer& value);

}  // namespace momentangle
