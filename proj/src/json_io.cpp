#include "momentangle/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace momentangle {

using nlohmann::ordered_json;

Arena arena_from_string(const std::string& text) {
  if (text == "complex") return Arena::complex();
  if (text == "real") return Arena::real();
  if (text.rfind("disk:", 0) == 0) {
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(text.substr(5), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() - 5) throw std::invalid_argument("disk:n needs an integer n");
    return Arena::disk(n);
  }
  throw std::invalid_argument("arena must be complex, real or disk:n");
}

Family family_from_string(const std::string& text) {
  if (text == "a") return Family::A;
  if (text == "b") return Family::B;
  if (text == "k") return Family::K;
  if (text == "l") return Family::L;
  throw std::invalid_argument("model must be a, b, k or l");
}

CoefficientRing coefficients_from_string(const std::string& text) {
  if (text == "z") return CoefficientRing::integers();
  if (text == "q") return CoefficientRing::rationals();
  if (text.rfind("zp:", 0) == 0) {
    std::size_t used = 0;
    std::int64_t p = 0;
    try {
      p = std::stoll(text.substr(3), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() - 3) throw std::invalid_argument("zp:p needs an integer p");
    return CoefficientRing::prime_field(p);
  }
  throw std::invalid_argument("coefficients must be z, q or zp:p");
}

ModelVariant resolve_variant(const std::string& family, const std::string& arena,
                             const CoefficientRing& coefficients, std::optional<int> maxdeg,
                             std::optional<int> truncate, const SimplicialComplex& sigma) {
  ModelVariant v;
  v.family = family_from_string(family);
  v.arena = arena_from_string(arena);
  if (v.family == Family::A && v.arena.kind() == Arena::Kind::Real) {
    if (!(coefficients == CoefficientRing::prime_field(2))) {
      throw std::invalid_argument("the real A-model exists over Z/2 only");
    }
    v.arena = Arena::real_mod2();
  }
  if (v.family == Family::A || v.family == Family::K) {
    if (!maxdeg) throw std::invalid_argument("model " + family + " requires maxdeg");
    v.truncation = truncate.value_or(*maxdeg + 1);
  } else if (truncate) {
    throw std::invalid_argument("truncation applies to the A- and K-models only");
  }
  validate_variant(v, sigma);
  return v;
}

SimplicialComplex parse_complex(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("expected a JSON object");
  if (!doc.contains("m") || !doc["m"].is_number_integer()) throw InputError("\"m\" must be an integer");
  if (!doc.contains("facets") || !doc["facets"].is_array()) throw InputError("\"facets\" must be an array");
  const auto m = doc["m"].get<std::int64_t>();
  if (m < 1 || m > IndexSet::kMaxElement) {
    throw InputError("\"m\" must lie in 1.." + std::to_string(IndexSet::kMaxElement));
  }
  std::vector<std::vector<int>> facets;
  for (const auto& facet : doc["facets"]) {
    if (!facet.is_array()) throw InputError("each facet must be an array of vertices");
    std::vector<int> vertices;
    for (const auto& v : facet) {
      if (!v.is_number_integer()) throw InputError("vertices must be integers");
      const auto i = v.get<std::int64_t>();
      if (i < 1 || i > m) throw InputError("vertex " + std::to_string(i) + " outside 1.." + std::to_string(m));
      vertices.push_back(static_cast<int>(i));
    }
    auto sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("repeated vertex in a facet");
    }
    facets.push_back(std::move(vertices));
  }
  return SimplicialComplex::from_facet_lists(static_cast<int>(m), facets);
}

ordered_json complex_to_json(const SimplicialComplex& sigma) {
  ordered_json facets = ordered_json::array();
  for (IndexSet f : sigma.facets()) facets.push_back(f.elements());
  return {{"m", sigma.ground_size()}, {"facets", facets}};
}

ordered_json integer_to_json(const Integer& value) {
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

namespace {

ordered_json torsion_json(const std::vector<Integer>& torsion) {
  ordered_json out = ordered_json::array();
  for (const auto& t : torsion) out.push_back(integer_to_json(t));
  return out;
}

std::string torsion_text(const std::vector<Integer>& torsion) {
  std::string out;
  for (const auto& t : torsion) out += (out.empty() ? "" : " ") + t.get_str();
  return out;
}

}  // namespace

ordered_json ring_to_json(const RingPresentation& ring) {
  ordered_json degrees = ordered_json::array();
  for (int k = 0; k <= ring.max_degree; ++k) {
    degrees.push_back({{"degree", k}, {"rank", ring.free_rank(k)}, {"torsion", torsion_json(ring.torsion(k))}});
  }
  ordered_json basis = ordered_json::array();
  for (std::size_t i = 0; i < ring.basis.size(); ++i) {
    const auto& b = ring.basis[i];
    basis.push_back({{"index", i},
                     {"degree", b.degree},
                     {"order", integer_to_json(b.order)},
                     {"multidegree", b.multidegree},
                     {"name", b.name}});
  }
  ordered_json products = ordered_json::array();
  for (const auto& [key, coords] : ring.products) {
    ordered_json terms = ordered_json::array();
    for (const auto& [k, c] : coords) terms.push_back({k, integer_to_json(c)});
    products.push_back({key.first, key.second, terms});
  }
  return {{"coefficients", ring.coefficients.name()},
          {"max_degree", ring.max_degree},
          {"degrees", degrees},
          {"basis", basis},
          {"products", products}};
}

ordered_json groups_to_json(const std::map<int, CohomologyGroup>& groups) {
  ordered_json out = ordered_json::array();
  for (const auto& [k, g] : groups) {
    out.push_back({{"degree", k}, {"rank", g.free_rank}, {"torsion", torsion_json(g.torsion)}});
  }
  return out;
}

std::string groups_to_csv(const std::map<int, CohomologyGroup>& groups) {
  std::ostringstream out;
  out << "degree,rank,torsion\n";
  for (const auto& [k, g] : groups) out << k << ',' << g.free_rank << ',' << torsion_text(g.torsion) << '\n';
  return out.str();
}

namespace {

std::vector<std::pair<IndexSet, int>> sorted_keys(const BettiTable& table) {
  std::vector<std::pair<IndexSet, int>> keys;
  for (const auto& [key, group] : table.entries) keys.push_back(key);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return graded_lex_less(a.first, b.first);
    return a.second < b.second;
  });
  return keys;
}

}  // namespace

ordered_json betti_to_json(const BettiTable& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& key : sorted_keys(table)) {
    const auto& g = table.entries.at(key);
    rows.push_back({{"alpha", key.first.elements()},
                    {"degree", key.second},
                    {"rank", g.free_rank},
                    {"torsion", torsion_json(g.torsion)}});
  }
  return {{"m", table.m}, {"rows", rows}};
}

std::string betti_to_csv(const BettiTable& table) {
  std::ostringstream out;
  out << "alpha,degree,rank,torsion\n";
  for (const auto& key : sorted_keys(table)) {
    const auto& g = table.entries.at(key);
    std::string alpha;
    for (int i : key.first.elements()) alpha += (alpha.empty() ? "" : " ") + std::to_string(i);
    out << alpha << ',' << key.second << ',' << g.free_rank << ',' << torsion_text(g.torsion) << '\n';
  }
  return out.str();
}

}  // namespace momentangle
