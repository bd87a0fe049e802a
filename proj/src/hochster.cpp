#include "momentangle/hochster.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "momentangle/cochains.hpp"
#include "momentangle/parallel.hpp"

namespace momentangle {

CohomologyGroup BettiTable::entry(IndexSet alpha, int degree) const {
  auto it = entries.find({alpha, degree});
  if (it != entries.end()) return it->second;
  CohomologyGroup zero;
  zero.degree = degree;
  return zero;
}

void BettiTable::set(IndexSet alpha, int degree, CohomologyGroup group) {
  group.generators.clear();
  group.degree = degree;
  if (group.is_zero()) {
    entries.erase({alpha, degree});
  } else {
    entries[{alpha, degree}] = std::move(group);
  }
}

bool operator==(const BettiTable& a, const BettiTable& b) {
  return a.m == b.m && a.entries == b.entries;
}

namespace {

std::vector<IndexSet> chosen(int m, const std::optional<std::vector<IndexSet>>& alphas) {
  if (!alphas) return all_subsets(m);
  for (IndexSet a : *alphas) {
    if (!a.is_subset_of(IndexSet::range(m))) {
      throw std::invalid_argument("Hochster table: α = " + a.to_string() + " is not in [m]");
    }
  }
  return *alphas;
}

std::string describe(const CohomologyGroup& g) {
  std::ostringstream out;
  out << "Z^" << g.free_rank;
  for (const auto& t : g.torsion) out << " + Z/" << t.get_str();
  return out.str();
}

}  // namespace

BettiTable hochster_table_model(const SimplicialComplex& sigma, const Arena& arena,
                                const CoefficientRing& coefficients,
                                const std::optional<std::vector<IndexSet>>& alphas) {
  const auto wanted = chosen(sigma.ground_size(), alphas);
  const DGAModel model = build_model(sigma, {Family::B, arena, std::nullopt});
  const auto components = hochster_components(model);
  std::vector<std::vector<CohomologyGroup>> groups(wanted.size());
  parallel_for(wanted.size(), [&](std::size_t i) {
    const IndexSet alpha = wanted[i];
    const BasedComplex& c = components.at(alpha);
    const int shift = hochster_shift(arena, alpha);
    HomologyEngine engine(c, coefficients);
    for (int k = 0; k <= alpha.size(); ++k) {
      CohomologyGroup g = engine.group(k + shift);
      g.degree = k;
      groups[i].push_back(std::move(g));
    }
  });
  BettiTable table;
  table.m = sigma.ground_size();
  for (std::size_t i = 0; i < wanted.size(); ++i) {
    for (auto& g : groups[i]) table.set(wanted[i], g.degree, std::move(g));
  }
  return table;
}

BettiTable hochster_table_topological(const SimplicialComplex& sigma,
                                      const CoefficientRing& coefficients,
                                      const std::optional<std::vector<IndexSet>>& alphas) {
  const auto wanted = chosen(sigma.ground_size(), alphas);
  std::vector<std::vector<CohomologyGroup>> groups(wanted.size());
  parallel_for(wanted.size(), [&](std::size_t i) {
    groups[i] = reduced_cohomology(sigma.restriction(wanted[i]), coefficients);
  });
  BettiTable table;
  table.m = sigma.ground_size();
  for (std::size_t i = 0; i < wanted.size(); ++i) {
    for (auto& g : groups[i]) {
      const int degree = g.degree + 1;
      table.set(wanted[i], degree, std::move(g));
    }
  }
  return table;
}

std::map<int, CohomologyGroup> assemble_poincare(const Arena& arena, const BettiTable& table) {
  std::map<int, CohomologyGroup> total;
  std::map<int, std::vector<Integer>> torsion;
  for (const auto& [key, g] : table.entries) {
    const int degree = key.second + hochster_shift(arena, key.first);
    CohomologyGroup& slot = total[degree];
    slot.degree = degree;
    slot.free_rank += g.free_rank;
    auto& t = torsion[degree];
    t.insert(t.end(), g.torsion.begin(), g.torsion.end());
  }
  for (auto& [degree, g] : total) g.torsion = canonical_torsion(torsion[degree]);
  return total;
}

std::vector<std::string> table_mismatches(const BettiTable& a, const BettiTable& b) {
  std::vector<std::string> out;
  std::set<std::pair<IndexSet, int>> keys;
  for (const auto& [key, g] : a.entries) keys.insert(key);
  for (const auto& [key, g] : b.entries) keys.insert(key);
  for (const auto& [alpha, degree] : keys) {
    const auto x = a.entry(alpha, degree);
    const auto y = b.entry(alpha, degree);
    if (!(x == y)) {
      out.push_back("α = " + alpha.to_string() + ", degree " + std::to_string(degree) + ": " +
                    describe(x) + " vs " + describe(y));
    }
  }
  return out;
}

std::vector<std::string> euler_violations(const SimplicialComplex& sigma, const BettiTable& table) {
  std::vector<std::string> out;
  for (IndexSet alpha : all_subsets(sigma.ground_size())) {
    long combinatorial = 0;
    for (IndexSet face : sigma.faces()) {
      if (face.is_subset_of(alpha)) combinatorial += face.size() % 2 == 0 ? 1 : -1;
    }
    long from_table = 0;
    for (int k = 0; k <= alpha.size(); ++k) {
      const long r = static_cast<long>(table.entry(alpha, k).free_rank);
      from_table += k % 2 == 0 ? r : -r;
    }
    if (combinatorial != from_table) {
      out.push_back("Euler characteristic mismatch at α = " + alpha.to_string() + ": " +
                    std::to_string(from_table) + " vs " + std::to_string(combinatorial));
    }
  }
  return out;
}

}  // namespace momentangle
