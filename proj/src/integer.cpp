#include "momentangle/integer.hpp"

#include <stdexcept>

namespace momentangle {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

CoefficientRing CoefficientRing::prime_field(std::int64_t p) {
  if (!is_prime(p) || p > (std::int64_t{1} << 31)) {
    throw std::invalid_argument("coefficient characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  }
  return {Kind::PrimeField, p};
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::PrimeField:
      return "Z/" + std::to_string(p_);
  }
  return "?";
}

Integer CoefficientRing::reduce(const Integer& value) const {
  if (kind_ != Kind::PrimeField) return value;
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(p_));
  return r;
}

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return value.get_si();
}

}  // namespace momentangle
