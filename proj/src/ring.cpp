#include "momentangle/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace momentangle {

// ---------------------------------------------------------------------------
// RingPresentation

std::vector<std::size_t> RingPresentation::indices(int degree) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].degree == degree) out.push_back(i);
  }
  return out;
}

std::size_t RingPresentation::free_rank(int degree) const {
  std::size_t n = 0;
  for (const auto& e : basis) n += e.degree == degree && e.order == 0;
  return n;
}

std::vector<Integer> RingPresentation::torsion(int degree) const {
  std::vector<Integer> orders;
  for (const auto& e : basis) {
    if (e.degree == degree && e.order != 0) orders.push_back(e.order);
  }
  return canonical_torsion(orders);
}

CohomologyGroup RingPresentation::group(int degree) const {
  CohomologyGroup g;
  g.degree = degree;
  g.free_rank = free_rank(degree);
  g.torsion = torsion(degree);
  return g;
}

IntVector RingPresentation::reduce(IntVector x) const {
  if (x.size() != basis.size()) throw std::invalid_argument("ring element has the wrong length");
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Integer& order = basis[i].order;
    if (order != 0) {
      mpz_fdiv_r(x[i].get_mpz_t(), x[i].get_mpz_t(), order.get_mpz_t());
    } else {
      x[i] = coefficients.reduce(x[i]);
    }
  }
  return x;
}

IntVector RingPresentation::basis_vector(std::size_t i) const {
  IntVector v(basis.size(), Integer(0));
  v.at(i) = 1;
  return v;
}

IntVector RingPresentation::product(std::size_t i, std::size_t j) const {
  IntVector out(basis.size(), Integer(0));
  auto it = products.find({i, j});
  if (it == products.end()) return out;
  for (const auto& [k, c] : it->second) out[k] = c;
  return out;
}

IntVector RingPresentation::multiply(const IntVector& x, const IntVector& y) const {
  IntVector out(basis.size(), Integer(0));
  for (const auto& [key, terms] : products) {
    const Integer& a = x[key.first];
    const Integer& b = y[key.second];
    if (a == 0 || b == 0) continue;
    const Integer ab = a * b;
    for (const auto& [k, c] : terms) out[k] += ab * c;
  }
  return reduce(std::move(out));
}

// ---------------------------------------------------------------------------
// Normal forms

ModelElement normal_form(const DGAModel& model, const std::vector<std::string>& letters) {
  if (!model.has_product()) throw std::invalid_argument("normal_form: model has no product");
  const auto& elements = model.local().elements;
  std::optional<std::uint16_t> unit;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    if (elements[e].pattern == "1") unit = static_cast<std::uint16_t>(e);
  }
  if (!unit) throw std::invalid_argument("normal_form: model has no unit");
  const int m = model.ground_size();
  std::map<std::string, Word> letter_words;
  for (int i = 0; i < m; ++i) {
    for (std::size_t e = 0; e < elements.size(); ++e) {
      if (e == *unit) continue;
      Word w(static_cast<std::size_t>(m), *unit);
      w[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
      letter_words.emplace(model.label(w), std::move(w));
    }
  }
  auto one = model.locate(Word(static_cast<std::size_t>(m), *unit));
  if (!one) throw std::logic_error("normal_form: unit missing from the model");
  ModelElement result{{*one, Integer(1)}};
  for (const auto& letter : letters) {
    auto it = letter_words.find(letter);
    if (it == letter_words.end()) throw std::invalid_argument("normal_form: unknown letter " + letter);
    auto ref = model.locate(it->second);
    if (!ref) return {};
    ModelElement next;
    for (const auto& [x, c] : result) {
      for (const auto& [y, d] : model.product(x, *ref)) {
        Integer& slot = next[y];
        slot += c * d;
        if (slot == 0) next.erase(y);
      }
    }
    result = std::move(next);
    if (result.empty()) break;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Assembly

namespace {

std::string describe_vector(const IntVector& v, const std::function<std::string(std::size_t)>& name) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Integer c = v[i];
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    if (c != 1) out << c.get_str() << "*";
    out << name(i);
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

RingPresentation assemble_ring(std::vector<RingComponent> components, int maxdeg,
                               const CoefficientRing& coefficients,
                               const ComponentProduct& product) {
  RingPresentation ring;
  ring.coefficients = coefficients;
  ring.max_degree = maxdeg;
  std::vector<HomologyEngine> engines;
  engines.reserve(components.size());
  for (auto& c : components) {
    ring.components.push_back(c.name);
    engines.emplace_back(c.complex, coefficients);
  }

  struct Slot {
    std::size_t component;
    int degree;
    std::size_t generator;
  };
  std::vector<Slot> slots;
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (int k = 0; k <= maxdeg; ++k) {
      const auto& group = engines[c].group(k);
      for (std::size_t g = 0; g < group.generators.size(); ++g) {
        const auto& gen = group.generators[g];
        RingBasisElement e;
        e.degree = k;
        e.order = gen.order;
        e.multidegree = components[c].multidegree.value_or(gen.multidegree);
        e.component = c;
        e.representative = gen.representative;
        e.name = components[c].describe ? components[c].describe(k, gen.representative) : "";
        ring.basis.push_back(std::move(e));
        slots.push_back({c, k, g});
      }
    }
  }
  std::vector<std::size_t> order(ring.basis.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = ring.basis[a];
    const auto& y = ring.basis[b];
    if (x.degree != y.degree) return x.degree < y.degree;
    return x.multidegree < y.multidegree;
  });
  std::vector<RingBasisElement> sorted;
  std::vector<Slot> sorted_slots;
  std::map<std::tuple<std::size_t, int, std::size_t>, std::size_t> global;
  for (std::size_t i : order) {
    global[{slots[i].component, slots[i].degree, slots[i].generator}] = sorted.size();
    sorted.push_back(std::move(ring.basis[i]));
    sorted_slots.push_back(slots[i]);
  }
  ring.basis = std::move(sorted);

  for (std::size_t i = 0; i < ring.basis.size(); ++i) {
    for (std::size_t j = 0; j < ring.basis.size(); ++j) {
      const auto& x = ring.basis[i];
      const auto& y = ring.basis[j];
      const int target = x.degree + y.degree;
      if (target > maxdeg) continue;
      auto result = product(x.component, x.representative, x.degree, y.component,
                            y.representative, y.degree);
      if (!result) continue;
      const auto& [c, z] = *result;
      const IntVector coords = engines[c].coordinates(target, z);
      SparseCoords sparse;
      for (std::size_t g = 0; g < coords.size(); ++g) {
        if (coords[g] != 0) sparse.emplace_back(global.at({c, target, g}), coords[g]);
      }
      std::sort(sparse.begin(), sparse.end());
      if (!sparse.empty()) ring.products[{i, j}] = std::move(sparse);
    }
  }
  return ring;
}

RingPresentation cohomology_ring(const DGAModel& model, int maxdeg,
                                 const CoefficientRing& coefficients) {
  if (!model.has_product()) throw std::invalid_argument("cohomology_ring: model has no product");
  if (model.complex().direction() != BasedComplex::kCochain) {
    throw std::invalid_argument("cohomology_ring: expects a cochain model");
  }
  RingComponent component;
  component.name = model.variant().arena.name() + ":" + family_name(model.variant().family);
  component.complex = model.complex();
  component.describe = [&model](int degree, const IntVector& v) {
    return describe_vector(v, [&](std::size_t i) { return model.label(BasisRef{degree, i}); });
  };
  std::vector<RingComponent> components;
  components.push_back(std::move(component));
  return assemble_ring(std::move(components), maxdeg, coefficients,
                       [&model](std::size_t, const IntVector& a, int p, std::size_t,
                                const IntVector& b, int q)
                           -> std::optional<std::pair<std::size_t, IntVector>> {
                         return std::make_pair(std::size_t{0}, model.multiply(a, p, b, q));
                       });
}

// ---------------------------------------------------------------------------
// Checks

namespace {

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector difference(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::string pair_name(const RingPresentation& ring, std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ":" + ring.basis[i].name + ", " + std::to_string(j) + ":" +
         ring.basis[j].name + ")";
}

}  // namespace

std::vector<std::string> commutativity_report(const RingPresentation& ring) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    for (std::size_t j = i + 1; j < ring.size(); ++j) {
      const int dx = ring.basis[i].degree;
      const int dy = ring.basis[j].degree;
      if (dx + dy > ring.max_degree) continue;
      IntVector yx = ring.product(j, i);
      if ((dx * dy) % 2 != 0) {
        for (auto& c : yx) c = -c;
      }
      if (!is_zero(ring.reduce(difference(ring.product(i, j), yx)))) {
        out.push_back("x·y != ±y·x for " + pair_name(ring, i, j));
      }
    }
  }
  return out;
}

std::vector<std::string> associativity_violations(const RingPresentation& ring) {
  std::vector<std::string> out;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int dij = ring.basis[i].degree + ring.basis[j].degree;
      if (dij > ring.max_degree) continue;
      const IntVector ij = ring.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (dij + ring.basis[k].degree > ring.max_degree) continue;
        const IntVector left = ring.multiply(ij, ring.basis_vector(k));
        const IntVector right = ring.multiply(ring.basis_vector(i), ring.product(j, k));
        if (left != right) {
          out.push_back("(xy)z != x(yz) for basis " + std::to_string(i) + ", " +
                        std::to_string(j) + ", " + std::to_string(k));
        }
      }
    }
  }
  return out;
}

namespace {

std::size_t count_idempotents_in(const RingPresentation& ring, const std::vector<std::size_t>& span) {
  if (ring.coefficients.kind() != CoefficientRing::Kind::PrimeField ||
      ring.coefficients.characteristic() != 2) {
    throw std::invalid_argument("idempotent counting needs Z/2 coefficients");
  }
  if (span.size() > 24) throw std::length_error("idempotent counting is limited to 24 basis elements");
  std::size_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << span.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    IntVector x(ring.size(), Integer(0));
    for (std::size_t b = 0; b < span.size(); ++b) {
      if (bits >> b & 1U) x[span[b]] = 1;
    }
    count += ring.multiply(x, x) == x;
  }
  return count;
}

}  // namespace

std::size_t count_idempotents(const RingPresentation& ring) {
  std::vector<std::size_t> all(ring.size());
  std::iota(all.begin(), all.end(), 0);
  return count_idempotents_in(ring, all);
}

std::size_t count_degree_zero_idempotents(const RingPresentation& ring) {
  return count_idempotents_in(ring, ring.indices(0));
}

// ---------------------------------------------------------------------------
// *-products

namespace {

std::vector<int> positions_in(IndexSet subset, IndexSet ambient) {
  std::vector<int> out;
  for (int i : subset.elements()) out.push_back(ambient.count_below(i) + 1);
  return out;
}

void require_star_arena(const Arena& arena) {
  if (arena.kind() == Arena::Kind::RealMod2) {
    throw std::invalid_argument("*-products are defined for the complex, odd and real arenas");
  }
}

struct StarContext {
  DGAModel ambient;
  DGAModel hat_alpha;
  DGAModel hat_beta;
  DGAModel hat_union;
  ComponentIsomorphism iso_alpha;
  ComponentIsomorphism iso_beta;
  ComponentIsomorphism iso_union;
};

StarContext star_context(const SimplicialComplex& sigma, IndexSet alpha, IndexSet beta,
                         const Arena& arena) {
  require_star_arena(arena);
  const IndexSet gamma = alpha | beta;
  if (!gamma.is_subset_of(IndexSet::range(sigma.ground_size()))) {
    throw std::invalid_argument("*-product: index sets must lie in the ground set");
  }
  const SimplicialComplex restricted = sigma.restriction(gamma);
  const IndexSet a(positions_in(alpha, gamma));
  const IndexSet b(positions_in(beta, gamma));
  const IndexSet all = IndexSet::range(gamma.size());
  DGAModel ambient = build_model(restricted, {Family::B, arena, std::nullopt});
  DGAModel hat_alpha = build_hat_model(restricted.restriction(a));
  DGAModel hat_beta = build_hat_model(restricted.restriction(b));
  DGAModel hat_union = build_hat_model(restricted);
  auto iso_alpha = component_isomorphism(ambient, hat_alpha, a);
  auto iso_beta = component_isomorphism(ambient, hat_beta, b);
  auto iso_union = component_isomorphism(ambient, hat_union, all);
  return {std::move(ambient), std::move(hat_alpha), std::move(hat_beta), std::move(hat_union),
          std::move(iso_alpha), std::move(iso_beta), std::move(iso_union)};
}

IntVector embed(const StarContext& ctx, const ComponentIsomorphism& iso, const IntVector& v,
                int degree) {
  IntVector out(ctx.ambient.complex().rank(degree + iso.shift), Integer(0));
  for (std::size_t h = 0; h < v.size(); ++h) {
    if (v[h] == 0) continue;
    const auto& [ref, sign] = iso.from_hat.at(BasisRef{degree, h});
    out[ref.index] += sign * v[h];
  }
  return out;
}

IntVector star(const StarContext& ctx, const IntVector& a, int p, const IntVector& b, int q) {
  const int pa = p + ctx.iso_alpha.shift;
  const int qb = q + ctx.iso_beta.shift;
  if (a.size() != ctx.hat_alpha.complex().rank(p) || b.size() != ctx.hat_beta.complex().rank(q)) {
    throw std::invalid_argument("*-product: cochain has the wrong length");
  }
  const IntVector product = ctx.ambient.multiply(embed(ctx, ctx.iso_alpha, a, p), pa,
                                                 embed(ctx, ctx.iso_beta, b, q), qb);
  IntVector out(ctx.hat_union.complex().rank(p + q), Integer(0));
  for (std::size_t i = 0; i < product.size(); ++i) {
    if (product[i] == 0) continue;
    auto it = ctx.iso_union.to_hat.find(BasisRef{pa + qb, i});
    if (it == ctx.iso_union.to_hat.end() || it->second.first.degree != p + q) {
      throw std::logic_error("*-product left the (α∪β)-component");
    }
    out[it->second.first.index] += it->second.second * product[i];
  }
  return out;
}

}  // namespace

IntVector star_product(const SimplicialComplex& sigma, IndexSet alpha, IndexSet beta,
                       const IntVector& a, int p, const IntVector& b, int q, const Arena& arena) {
  const StarContext ctx = star_context(sigma, alpha, beta, arena);
  return star(ctx, a, p, b, q);
}

StarTable star_products(const SimplicialComplex& sigma, IndexSet alpha, IndexSet beta,
                        const Arena& arena, const CoefficientRing& coefficients) {
  const StarContext ctx = star_context(sigma, alpha, beta, arena);
  HomologyEngine left(ctx.hat_alpha.complex(), coefficients);
  HomologyEngine right(ctx.hat_beta.complex(), coefficients);
  HomologyEngine target(ctx.hat_union.complex(), coefficients);
  StarTable table{alpha, beta, {}};
  for (int p = 0; p <= alpha.size(); ++p) {
    const auto& gl = left.group(p).generators;
    for (int q = 0; q <= beta.size(); ++q) {
      const auto& gr = right.group(q).generators;
      for (std::size_t i = 0; i < gl.size(); ++i) {
        for (std::size_t j = 0; j < gr.size(); ++j) {
          const IntVector z = star(ctx, gl[i].representative, p, gr[j].representative, q);
          table.entries.push_back({p, i, q, j, target.coordinates(p + q, z)});
        }
      }
    }
  }
  return table;
}

}  // namespace momentangle
