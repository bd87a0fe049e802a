#pragma once

#include <cstdint>

#include "momentangle/simplicial_complex.hpp"

namespace momentangle {

/// Reproducible random complex on [m]: between 1 and m + 1 facets, each a
/// random subset of [m]. Uses raw mt19937_64 output so the result does not
/// depend on the standard library's distributions.
SimplicialComplex random_complex(int m, std::uint64_t seed);

}  // namespace momentangle
