#include "momentangle/random_complex.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace momentangle {

SimplicialComplex random_complex(int m, std::uint64_t seed) {
  if (m < 1 || m > 20) throw std::invalid_argument("random_complex: m must be in 1..20");
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = IndexSet::range(m).bits();
  const auto count = 1 + rng() % static_cast<std::uint64_t>(m + 1);
  std::vector<IndexSet> facets;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t bits = rng() & mask;
    // Large facets are thinned half of the time.
    if (std::popcount(bits) > 2 && rng() % 2 == 0) bits &= rng();
    facets.emplace_back(bits);
  }
  return SimplicialComplex::from_facets(m, facets);
}

}  // namespace momentangle
