#include "momentangle/polytope.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace momentangle {

namespace {

// Vertex j (1-based) of CΣ' is labelled by faces[j-1]; vertex 1 is the apex.
struct Subdivision {
  std::vector<IndexSet> labels;
  std::map<IndexSet, int> vertex;

  explicit Subdivision(const SimplicialComplex& sigma) : labels(cone_subdivision_labels(sigma)) {
    for (std::size_t j = 0; j < labels.size(); ++j) vertex[labels[j]] = static_cast<int>(j) + 1;
  }
  [[nodiscard]] int size() const { return static_cast<int>(labels.size()); }
};

void require_subset(const SimplicialComplex& sigma, IndexSet alpha) {
  if (!alpha.is_subset_of(IndexSet::range(sigma.ground_size()))) {
    throw std::invalid_argument("α = " + alpha.to_string() + " is not contained in [m]");
  }
}

std::string simplex_name(const Subdivision& sd, const std::vector<int>& seq) {
  std::string out = "[";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += "<";
    const IndexSet label = sd.labels[static_cast<std::size_t>(seq[i] - 1)];
    out += label.empty() ? "o" : label.to_string();
  }
  return out + "]";
}

std::string describe_cochain(const Subdivision& sd, const CochainModel& model, int degree,
                             const IntVector& v) {
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
    out << simplex_name(sd, model.simplex(degree, i));
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

Multidegree indicator(int m, IndexSet alpha) {
  Multidegree out(static_cast<std::size_t>(m), 0);
  for (int i : alpha.elements()) out[static_cast<std::size_t>(i - 1)] = 1;
  return out;
}

int top_degree(const SimplicialComplex& sigma) { return sigma.dimension() + 1; }

// v_σ -> min(σ∩α) on the unsubdivided cone (apex m+1).
std::vector<int> comparison_map(const SimplicialComplex& sigma, const Subdivision& sd,
                                IndexSet alpha) {
  const int apex = sigma.ground_size() + 1;
  std::vector<int> map(static_cast<std::size_t>(sd.size() + 1), 0);
  for (int j = 1; j <= sd.size(); ++j) {
    const IndexSet meet = sd.labels[static_cast<std::size_t>(j - 1)] & alpha;
    map[static_cast<std::size_t>(j)] = meet.empty() ? apex : meet.elements().front();
  }
  return map;
}

std::vector<int> identity_map(int n) {
  std::vector<int> map(static_cast<std::size_t>(n + 1));
  for (int v = 0; v <= n; ++v) map[static_cast<std::size_t>(v)] = v;
  return map;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector difference(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

RingPresentation relative_ring_P(const SimplicialComplex& sigma, IndexSet alpha,
                                 std::optional<int> maxdeg, const CoefficientRing& coefficients) {
  require_subset(sigma, alpha);
  const Subdivision sd(sigma);
  auto model = std::make_shared<CochainModel>(dual_blocks_pair(sigma, alpha));
  RingComponent component;
  component.name = "P_" + alpha.to_string();
  component.complex = model->complex();
  component.multidegree = indicator(sigma.ground_size(), alpha);
  component.describe = [model, sd](int degree, const IntVector& v) {
    return describe_cochain(sd, *model, degree, v);
  };
  std::vector<RingComponent> components;
  components.push_back(std::move(component));
  return assemble_ring(std::move(components), maxdeg.value_or(top_degree(sigma)), coefficients,
                       [model](std::size_t, const IntVector& a, int p, std::size_t,
                               const IntVector& b, int q)
                           -> std::optional<std::pair<std::size_t, IntVector>> {
                         return std::make_pair(std::size_t{0}, model->cup(a, p, b, q));
                       });
}

ThetaReport theta_check(const SimplicialComplex& sigma, IndexSet alpha) {
  require_subset(sigma, alpha);
  ThetaReport report;
  report.alpha = alpha;
  const Subdivision sd(sigma);
  const SimplicialPair p_pair = dual_blocks_pair(sigma, alpha);
  const CochainModel polytope(p_pair);

  std::vector<IndexSet> ambient_faces;
  std::vector<IndexSet> sub_faces;
  for (IndexSet flag : p_pair.ambient.faces()) {
    bool inside = true;
    for (int v : flag.elements()) inside = inside && sd.labels[static_cast<std::size_t>(v - 1)].is_subset_of(alpha);
    if (!inside) continue;
    ambient_faces.push_back(flag);
    if (!flag.contains(1)) sub_faces.push_back(flag);
  }
  const int n = sd.size();
  const CochainModel target(SimplicialPair(SimplicialComplex(n, ambient_faces),
                                           SimplicialComplex(n, sub_faces), sd.labels));

  std::vector<int> retraction(static_cast<std::size_t>(n + 1), 0);
  for (int j = 1; j <= n; ++j) {
    retraction[static_cast<std::size_t>(j)] =
        sd.vertex.at(sd.labels[static_cast<std::size_t>(j - 1)] & alpha);
  }
  const int top = top_degree(sigma);
  report.chain_map = true;
  report.retraction_identity = true;
  for (int k = 0; k <= top; ++k) {
    const IntMatrix r_k = polytope.pullback_matrix(target, retraction, k);
    const IntMatrix i_k = target.pullback_matrix(polytope, identity_map(n), k);
    if (!(i_k * r_k == IntMatrix::identity(target.complex().rank(k)))) {
      report.retraction_identity = false;
      report.issues.push_back("restriction ∘ retraction != id in degree " + std::to_string(k));
    }
    if (k + 1 <= top && polytope.complex().in_range(k + 1) && target.complex().in_range(k + 1)) {
      const IntMatrix r_next = polytope.pullback_matrix(target, retraction, k + 1);
      if (!(r_next * target.complex().differential(k) == polytope.complex().differential(k) * r_k)) {
        report.chain_map = false;
        report.issues.push_back("retraction is not a chain map in degree " + std::to_string(k));
      }
    }
  }

  HomologyEngine p_engine(polytope.complex(), CoefficientRing::integers());
  HomologyEngine t_engine(target.complex(), CoefficientRing::integers());
  report.groups_match = true;
  for (int k = 0; k <= top; ++k) {
    report.polytope_side.push_back(p_engine.group(k));
    report.cone_side.push_back(t_engine.group(k));
    if (!(report.polytope_side.back() == report.cone_side.back())) {
      report.groups_match = false;
      report.issues.push_back("groups differ in degree " + std::to_string(k));
    }
  }

  // Unsubdivided cone pair (CΣ_α, Σ_α) pulled back along v_σ -> min(σ∩α).
  const CochainModel cone_model(cone(sigma.full_subcomplex(alpha)));
  HomologyEngine c_engine(cone_model.complex(), CoefficientRing::integers());
  const auto map = comparison_map(sigma, sd, alpha);
  report.cone_comparison = true;
  for (int k = 0; k <= top; ++k) {
    const auto& source = c_engine.group(k);
    const auto& image_group = p_engine.group(k);
    if (!(source == image_group)) {
      report.cone_comparison = false;
      report.issues.push_back("cone pair and polytope pair differ in degree " + std::to_string(k));
      continue;
    }
    const IntMatrix phi = polytope.pullback_matrix(cone_model, map, k);
    std::vector<std::size_t> free_rows;
    for (std::size_t g = 0; g < image_group.generators.size(); ++g) {
      if (image_group.generators[g].order == 0) free_rows.push_back(g);
    }
    DenseMatrix<Integer> square(free_rows.size(), free_rows.size(), Integer(0));
    std::size_t col = 0;
    for (const auto& gen : source.generators) {
      const IntVector coords = p_engine.coordinates(k, phi.apply(gen.representative));
      if (gen.order != 0) {
        if (is_zero(coords)) {
          report.cone_comparison = false;
          report.issues.push_back("torsion class killed in degree " + std::to_string(k));
        }
        continue;
      }
      for (std::size_t r = 0; r < free_rows.size(); ++r) square(r, col) = coords[free_rows[r]];
      ++col;
    }
    if (!free_rows.empty()) {
      const Integer det = determinant(IntMatrix::from_dense(square));
      if (det != 1 && det != -1) {
        report.cone_comparison = false;
        report.issues.push_back("comparison map is not unimodular in degree " + std::to_string(k));
      }
    }
  }
  return report;
}

DiagramReport cup_diagram_check(const SimplicialComplex& sigma, IndexSet alpha, IndexSet beta) {
  require_subset(sigma, alpha);
  require_subset(sigma, beta);
  DiagramReport report;
  report.alpha = alpha;
  report.beta = beta;
  const int m = sigma.ground_size();
  const int apex = m + 1;
  const IndexSet gamma = alpha | beta;

  for (int v : (alpha - beta).elements()) report.vertex_order.push_back(v);
  for (int v : (alpha & beta).elements()) report.vertex_order.push_back(v);
  report.vertex_order.push_back(apex);
  for (int v : (beta - alpha).elements()) report.vertex_order.push_back(v);
  std::vector<int> full_order = report.vertex_order;
  for (int v : (IndexSet::range(m) - gamma).elements()) full_order.push_back(v);

  const CochainModel x_alpha(cone(sigma.full_subcomplex(alpha)));
  const CochainModel x_beta(cone(sigma.full_subcomplex(beta)));
  const SimplicialPair gamma_pair = cone(sigma.full_subcomplex(gamma));
  const CochainModel x_gamma(gamma_pair, full_order);
  const CochainModel y_gamma(SimplicialPair(gamma_pair.ambient, SimplicialComplex::empty(m + 1)),
                             full_order);

  auto projection = [&](IndexSet keep) {
    std::vector<int> map(static_cast<std::size_t>(m + 2), 0);
    for (int v = 1; v <= m + 1; ++v) map[static_cast<std::size_t>(v)] = keep.contains(v) ? v : apex;
    return map;
  };
  const auto pi_alpha = projection(alpha);
  const auto pi_beta = projection(beta);

  const Subdivision sd(sigma);
  const CochainModel p_alpha(dual_blocks_pair(sigma, alpha));
  const CochainModel p_beta(dual_blocks_pair(sigma, beta));
  const CochainModel p_gamma(dual_blocks_pair(sigma, gamma));
  const auto phi_alpha = comparison_map(sigma, sd, alpha);
  const auto phi_beta = comparison_map(sigma, sd, beta);
  const auto phi_gamma = comparison_map(sigma, sd, gamma);

  HomologyEngine left(x_alpha.complex(), CoefficientRing::integers());
  HomologyEngine right(x_beta.complex(), CoefficientRing::integers());
  HomologyEngine target(p_gamma.complex(), CoefficientRing::integers());
  const int top = top_degree(sigma);
  for (int p = 0; p <= top; ++p) {
    const auto gens_a = left.group(p).generators;
    for (int q = 0; p + q <= top; ++q) {
      const auto gens_b = right.group(q).generators;
      for (std::size_t i = 0; i < gens_a.size(); ++i) {
        for (std::size_t j = 0; j < gens_b.size(); ++j) {
          ++report.pairs_checked;
          const IntVector& x = gens_a[i].representative;
          const IntVector& y = gens_b[j].representative;
          const std::string at = "x" + std::to_string(i) + " (degree " + std::to_string(p) +
                                 ") * y" + std::to_string(j) + " (degree " + std::to_string(q) + ")";
          const IntVector absolute =
              y_gamma.cup(y_gamma.pullback(x_alpha, pi_alpha, x, p), p,
                          y_gamma.pullback(x_beta, pi_beta, y, q), q);
          // must vanish on the base Σ_{α∪β}
          for (std::size_t s = 0; s < absolute.size(); ++s) {
            if (absolute[s] == 0) continue;
            const auto& seq = y_gamma.simplex(p + q, s);
            if (std::find(seq.begin(), seq.end(), apex) == seq.end()) {
              report.mismatches.push_back(at + ": product does not vanish on the base");
              break;
            }
          }
          const IntVector star = x_gamma.pullback(y_gamma, identity_map(m + 1), absolute, p + q);
          const IntVector lower = p_gamma.pullback(x_gamma, phi_gamma, star, p + q);
          const IntVector upper =
              p_gamma.cup(p_alpha, p_alpha.pullback(x_alpha, phi_alpha, x, p), p, p_beta,
                          p_beta.pullback(x_beta, phi_beta, y, q), q);
          if (!target.is_cycle(p + q, upper) || !target.is_cycle(p + q, lower)) {
            report.mismatches.push_back(at + ": product is not a cocycle");
            continue;
          }
          const IntVector diff = difference(upper, lower);
          if (!is_zero(diff) && !target.is_boundary(p + q, diff)) {
            report.mismatches.push_back(at + ": Θ(x ∪ y) and Θx * Θy differ");
          }
        }
      }
    }
  }
  return report;
}

RingPresentation glm_ring(const SimplicialComplex& sigma, std::optional<int> maxdeg,
                          const CoefficientRing& coefficients) {
  const int m = sigma.ground_size();
  const Subdivision sd(sigma);
  const auto subsets = all_subsets(m);
  auto models = std::make_shared<std::vector<CochainModel>>();
  std::map<IndexSet, std::size_t> position;
  std::vector<RingComponent> components;
  for (IndexSet alpha : subsets) {
    position[alpha] = models->size();
    models->emplace_back(dual_blocks_pair(sigma, alpha));
  }
  for (IndexSet alpha : subsets) {
    const std::size_t c = position.at(alpha);
    RingComponent component;
    component.name = "P_" + alpha.to_string();
    component.complex = (*models)[c].complex();
    component.multidegree = indicator(m, alpha);
    component.describe = [models, sd, c](int degree, const IntVector& v) {
      return describe_cochain(sd, (*models)[c], degree, v);
    };
    components.push_back(std::move(component));
  }
  auto index_sets = std::make_shared<std::vector<IndexSet>>(subsets);
  return assemble_ring(
      std::move(components), maxdeg.value_or(top_degree(sigma)), coefficients,
      [models, index_sets, position](std::size_t a, const IntVector& x, int p, std::size_t b,
                                     const IntVector& y, int q)
          -> std::optional<std::pair<std::size_t, IntVector>> {
        const std::size_t c = position.at((*index_sets)[a] | (*index_sets)[b]);
        const auto& ms = *models;
        return std::make_pair(c, ms[c].cup(ms[a], x, p, ms[b], y, q));
      });
}

}  // namespace momentangle
