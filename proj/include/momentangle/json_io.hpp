#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "momentangle/hochster.hpp"
#include "momentangle/ring.hpp"
#include "momentangle/simplicial_complex.hpp"

namespace momentangle {

/// Malformed simplicial-complex input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Command-line spellings: "complex", "real", "disk:n"; "a", "b", "k", "l";
/// "z", "q", "zp:p". Throw std::invalid_argument otherwise.
Arena arena_from_string(const std::string& text);
Family family_from_string(const std::string& text);
CoefficientRing coefficients_from_string(const std::string& text);

/// Model variant for command-line choices. The real A-model maps to the
/// mod-2 arena and needs ℤ/2 coefficients; A and K need maxdeg and are
/// truncated at `truncate` (default maxdeg + 1). Throws std::invalid_argument
/// for illegal combinations, including those rejected by validate_variant.
ModelVariant resolve_variant(const std::string& family, const std::string& arena,
                             const CoefficientRing& coefficients, std::optional<int> maxdeg,
                             std::optional<int> truncate, const SimplicialComplex& sigma);

/// Parses {"m": <int ≥ 1>, "facets": [[1-based vertices], ...]}.
SimplicialComplex parse_complex(const std::string& text);
nlohmann::ordered_json complex_to_json(const SimplicialComplex& sigma);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::ordered_json integer_to_json(const Integer& value);

/// Degrees with ranks and torsion, the basis with names, and the nonzero
/// structure constants as triples [i, j, [[k, c], ...]].
nlohmann::ordered_json ring_to_json(const RingPresentation& ring);

nlohmann::ordered_json groups_to_json(const std::map<int, CohomologyGroup>& groups);
/// Header "degree,rank,torsion"; torsion orders separated by spaces.
std::string groups_to_csv(const std::map<int, CohomologyGroup>& groups);

/// Rows (alpha, degree, rank, torsion) in (alpha graded-lex, degree) order.
nlohmann::ordered_json betti_to_json(const BettiTable& table);
std::string betti_to_csv(const BettiTable& table);

}  // namespace momentangle
