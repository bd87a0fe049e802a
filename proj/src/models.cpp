#include "momentangle/models.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "momentangle/smith.hpp"

namespace momentangle {

// ---------------------------------------------------------------------------
// Arenas and variants

Arena Arena::complex(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("complex arena needs even n >= 2");
  return {Kind::Complex, n};
}

Arena Arena::odd(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("odd arena needs odd n >= 3");
  return {Kind::Odd, n};
}

Arena Arena::disk(int n) {
  if (n < 1) throw std::invalid_argument("disk dimension must be positive");
  if (n == 1) return real();
  return n % 2 == 0 ? complex(n) : odd(n);
}

CoefficientRing Arena::natural_coefficients() const {
  return kind_ == Kind::RealMod2 ? CoefficientRing::prime_field(2) : CoefficientRing::integers();
}

std::string Arena::name() const {
  switch (kind_) {
    case Kind::Complex:
      return n_ == 2 ? "complex" : "disk:" + std::to_string(n_);
    case Kind::Odd:
      return "disk:" + std::to_string(n_);
    case Kind::Real:
      return "real";
    case Kind::RealMod2:
      return "real_mod2";
  }
  return "?";
}

std::string family_name(Family family) {
  switch (family) {
    case Family::A:
      return "A";
    case Family::B:
      return "B";
    case Family::K:
      return "K";
    case Family::L:
      return "L";
    case Family::HatB:
      return "hatB";
  }
  return "?";
}

void validate_variant(const ModelVariant& v, const SimplicialComplex& sigma) {
  const auto kind = v.arena.kind();
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("model " + family_name(v.family) + " in arena " +
                                v.arena.name() + ": " + why);
  };
  switch (v.family) {
    case Family::A:
      if (kind != Arena::Kind::Complex && kind != Arena::Kind::RealMod2) {
        fail("the A-model exists for even n and, over Z/2, for the real arena");
      }
      break;
    case Family::K:
      if (kind != Arena::Kind::Complex) fail("the K-model exists for even n only");
      break;
    case Family::L:
      if (kind == Arena::Kind::RealMod2) fail("the L-model has no mod-2 real variant");
      break;
    case Family::HatB:
      if (!v.arena.is_real()) fail("hatB always carries the real grading");
      break;
    case Family::B:
      break;
  }
  const bool infinite = v.family == Family::A || v.family == Family::K;
  if (infinite && !sigma.vertex_set().empty() && !v.truncation) {
    fail("a truncation degree is required");
  }
  if (v.truncation && *v.truncation < 0) fail("truncation degree must be non-negative");
}

// ---------------------------------------------------------------------------
// Local models

namespace {

std::string power(const std::string& letter, int k) {
  if (k == 0) return "";
  return k == 1 ? letter : letter + "^" + std::to_string(k);
}

int add_element(LocalModel& local, std::string pattern, int degree, int weight, bool in_face) {
  local.elements.push_back({std::move(pattern), degree, weight, in_face});
  return static_cast<int>(local.elements.size()) - 1;
}

void size_tables(LocalModel& local, bool with_product, bool with_coproduct) {
  const std::size_t n = local.elements.size();
  local.differential.assign(n, {});
  if (with_product) local.product.assign(n, std::vector<LocalModel::Terms>(n));
  if (with_coproduct) local.coproduct.assign(n, {});
}

// 1, s, t (B) or 1, v, u (L); real arena uses degrees 0 and 1.
LocalModel three_element_model(Family family, const Arena& arena) {
  LocalModel local;
  const bool is_b = family == Family::B;
  const int low = arena.s_degree();
  const int high = arena.t_degree();
  const int one = add_element(local, "1", 0, 0, false);
  const int s = add_element(local, is_b ? "s#" : "v#", low, 1, false);
  const int t = add_element(local, is_b ? "t#" : "u#", high, 1, true);
  size_tables(local, is_b, !is_b);
  if (is_b) {
    local.differential[s] = {{t, arena.is_real() ? -1 : 1}};
    for (int x : {one, s, t}) {
      local.product[one][x] = {{x, 1}};
      local.product[x][one] = {{x, 1}};
    }
    if (arena.is_real()) {
      local.product[s][s] = {{s, 1}};
      local.product[t][s] = {{t, 1}};
    }
  } else {
    local.differential[t] = {{s, 1}};
    local.coproduct[one] = {{one, one, 1}};
    local.coproduct[s] = {{s, one, 1}, {one, s, 1}};
    local.coproduct[t] = {{t, one, 1}, {one, t, 1}};
    if (arena.is_real()) {
      local.coproduct[s].push_back({s, s, 1});
      local.coproduct[t].push_back({t, s, 1});
    }
  }
  return local;
}

LocalModel hat_model() {
  LocalModel local;
  const int s = add_element(local, "s#", 0, 1, false);
  const int t = add_element(local, "t#", 1, 1, true);
  size_tables(local, true, false);
  local.differential[s] = {{t, -1}};
  local.product[s][s] = {{s, 1}};
  local.product[t][s] = {{t, 1}};
  return local;
}

// t^k and t^k s (A) or u_k and u_k v (K), complex arena, up to max_degree.
LocalModel polynomial_model(Family family, const Arena& arena, int max_degree) {
  LocalModel local;
  const int n = arena.n();
  const bool is_a = family == Family::A;
  std::vector<int> plain;
  std::vector<int> odd;
  for (int k = 0; k * n <= max_degree; ++k) {
    const std::string p = is_a ? power("t#", k) : power("u#", k);
    plain.push_back(add_element(local, p.empty() ? "1" : p, k * n, k, k > 0));
    if (k * n + n - 1 <= max_degree) {
      odd.push_back(add_element(local, p + (is_a ? "s#" : "v#"), k * n + n - 1, k + 1, k > 0));
    }
  }
  size_tables(local, is_a, !is_a);
  const int kmax = static_cast<int>(plain.size()) - 1;
  const int omax = static_cast<int>(odd.size()) - 1;
  if (is_a) {
    for (int k = 0; k <= omax; ++k) {
      if (k + 1 <= kmax) local.differential[odd[k]] = {{plain[k + 1], 1}};
    }
    // (t^a s^e)(t^b s^f) = t^{a+b} s^{e+f}
    for (int a = 0; a <= kmax; ++a) {
      for (int b = 0; a + b <= kmax; ++b) {
        local.product[plain[a]][plain[b]] = {{plain[a + b], 1}};
        if (a + b <= omax) {
          if (a <= omax) local.product[odd[a]][plain[b]] = {{odd[a + b], 1}};
          if (b <= omax) local.product[plain[a]][odd[b]] = {{odd[a + b], 1}};
        }
      }
    }
  } else {
    for (int k = 1; k <= kmax; ++k) {
      if (k - 1 <= omax) local.differential[plain[k]] = {{odd[k - 1], 1}};
    }
    for (int k = 0; k <= kmax; ++k) {
      for (int a = 0; a <= k; ++a) local.coproduct[plain[k]].push_back({plain[a], plain[k - a], 1});
    }
    for (int k = 0; k <= omax; ++k) {
      for (int a = 0; a <= k; ++a) {
        local.coproduct[odd[k]].push_back({odd[a], plain[k - a], 1});
        local.coproduct[odd[k]].push_back({plain[a], odd[k - a], 1});
      }
    }
  }
  return local;
}

// Mod-2 real A: s^e t^k with deg = k, d(s t^k) = t^{k+1}, t s = s t + t.
LocalModel real_mod2_a_model(int max_degree) {
  LocalModel local;
  std::vector<int> plain;
  std::vector<int> with_s;
  for (int k = 0; k <= max_degree; ++k) {
    const std::string p = power("t#", k);
    plain.push_back(add_element(local, p.empty() ? "1" : p, k, k, k > 0));
    with_s.push_back(add_element(local, "s#" + p, k, k + 1, k > 0));
  }
  size_tables(local, true, false);
  for (int k = 0; k + 1 <= max_degree; ++k) local.differential[with_s[k]] = {{plain[k + 1], 1}};
  auto element = [&](int e, int k) { return e ? with_s[k] : plain[k]; };
  for (int e = 0; e <= 1; ++e) {
    for (int f = 0; f <= 1; ++f) {
      for (int a = 0; a <= max_degree; ++a) {
        for (int b = 0; a + b <= max_degree; ++b) {
          LocalModel::Terms terms;
          if (f == 0) {
            terms.push_back({element(e, a + b), 1});
          } else {
            terms.push_back({with_s[a + b], 1});
            if (a % 2 == 1) {
              if (e == 1) {
                terms.clear();  // s t^{a+b} + s t^{a+b} = 0
              } else {
                terms.push_back({plain[a + b], 1});
              }
            }
          }
          local.product[element(e, a)][element(f, b)] = terms;
        }
      }
    }
  }
  return local;
}

}  // namespace

LocalModel local_model(Family family, const Arena& arena, std::optional<int> max_degree) {
  switch (family) {
    case Family::B:
    case Family::L:
      return three_element_model(family, arena);
    case Family::HatB:
      return hat_model();
    case Family::A:
      if (arena.kind() == Arena::Kind::RealMod2) return real_mod2_a_model(max_degree.value_or(0));
      return polynomial_model(family, arena, max_degree.value_or(0));
    case Family::K:
      return polynomial_model(family, arena, max_degree.value_or(0));
  }
  throw std::logic_error("unknown model family");
}

// ---------------------------------------------------------------------------
// Global models

namespace {

int direction_of(Family family) {
  return family == Family::K || family == Family::L ? BasedComplex::kChain
                                                     : BasedComplex::kCochain;
}

std::optional<int> effective_cap(const SimplicialComplex& sigma, const ModelVariant& v) {
  if (v.family != Family::A && v.family != Family::K) return std::nullopt;
  if (v.truncation) return v.truncation;
  // No vertices: only the exterior part survives.
  return sigma.ground_size() * std::max(1, v.arena.n());
}

int sign_of(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

DGAModel::DGAModel(SimplicialComplex sigma, ModelVariant variant)
    : sigma_(std::move(sigma)), variant_(variant) {
  validate_variant(variant_, sigma_);
  if (variant_.family != Family::A && variant_.family != Family::K) variant_.truncation.reset();
  local_ = local_model(variant_.family, variant_.arena, effective_cap(sigma_, variant_));
  enumerate();
  build_differentials();
}

void DGAModel::enumerate() {
  const int m = sigma_.ground_size();
  const auto cap = effective_cap(sigma_, variant_);
  Word current(static_cast<std::size_t>(m), 0);
  std::vector<std::pair<int, Word>> found;
  int max_degree = 0;
  std::function<void(int, int, IndexSet)> recurse = [&](int vertex, int degree, IndexSet face) {
    if (vertex == m) {
      found.emplace_back(degree, current);
      max_degree = std::max(max_degree, degree);
      return;
    }
    for (std::size_t e = 0; e < local_.elements.size(); ++e) {
      const auto& el = local_.elements[e];
      const int next_degree = degree + el.degree;
      if (cap && next_degree > *cap) continue;
      IndexSet next_face = el.in_face ? face.with(vertex + 1) : face;
      if (el.in_face && !sigma_.contains(next_face)) continue;
      current[static_cast<std::size_t>(vertex)] = static_cast<std::uint16_t>(e);
      recurse(vertex + 1, next_degree, next_face);
    }
  };
  recurse(0, 0, IndexSet());
  if (variant_.truncation) max_degree = *variant_.truncation;
  words_.assign(static_cast<std::size_t>(max_degree) + 1, {});
  for (auto& [degree, word] : found) {
    auto& slot = words_[static_cast<std::size_t>(degree)];
    index_.emplace(word, BasisRef{degree, slot.size()});
    slot.push_back(std::move(word));
  }
}

void DGAModel::build_differentials() {
  std::vector<std::vector<BasisElement>> bases(words_.size());
  for (std::size_t k = 0; k < words_.size(); ++k) {
    for (const auto& w : words_[k]) {
      BasisElement e;
      e.label = label(w);
      for (std::uint16_t x : w) e.multidegree.push_back(local_.elements[x].weight);
      bases[k].push_back(std::move(e));
    }
  }
  complex_ = BasedComplex(direction_of(variant_.family), 0, std::move(bases), variant_.truncation);
  const int dir = complex_.direction();
  for (int k = 0; k <= complex_.max_degree(); ++k) {
    if (!complex_.in_range(k + dir)) continue;
    IntMatrix d(complex_.rank(k + dir), complex_.rank(k));
    for (std::size_t j = 0; j < complex_.rank(k); ++j) {
      IntMatrix::Column column;
      for (const auto& [ref, c] : differential(BasisRef{k, j})) {
        column.emplace_back(ref.index, c);
      }
      d.set_column(j, std::move(column));
    }
    complex_.set_differential(k, std::move(d));
  }
}

const Word& DGAModel::word(BasisRef ref) const {
  return words_.at(static_cast<std::size_t>(ref.degree)).at(ref.index);
}

std::optional<BasisRef> DGAModel::locate(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int DGAModel::degree_of(const Word& w) const {
  int d = 0;
  for (std::uint16_t x : w) d += local_.elements[x].degree;
  return d;
}

IndexSet DGAModel::face_support(const Word& w) const {
  IndexSet face;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (local_.elements[w[i]].in_face) face = face.with(static_cast<int>(i) + 1);
  }
  return face;
}

IndexSet DGAModel::support(const Word& w) const {
  IndexSet s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (local_.elements[w[i]].weight > 0) s = s.with(static_cast<int>(i) + 1);
  }
  return s;
}

bool DGAModel::allowed(const Word& w) const { return locate(w).has_value(); }

std::string DGAModel::label(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::string& pattern = local_.elements[w[i]].pattern;
    if (pattern == "1") continue;
    const std::string index = std::to_string(i + 1);
    for (char c : pattern) {
      if (c == '#') {
        out += index;
      } else {
        out += c;
      }
    }
  }
  return out.empty() ? "1" : out;
}

ModelElement DGAModel::differential(BasisRef x) const {
  const Word& w = word(x);
  ModelElement out;
  int prefix_degree = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const auto& [target, c] : local_.differential[w[i]]) {
      Word next = w;
      next[i] = static_cast<std::uint16_t>(target);
      auto ref = locate(next);
      if (!ref) continue;
      out[*ref] += sign_of(prefix_degree) * c;
    }
    prefix_degree += local_.elements[w[i]].degree;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

ModelElement DGAModel::product(BasisRef a, BasisRef b) const {
  if (!has_product()) throw std::logic_error("model has no product");
  const Word& wa = word(a);
  const Word& wb = word(b);
  const std::size_t m = wa.size();
  // Koszul sign of interleaving: b_j moves past a_{j+1}, ..., a_m.
  int exponent = 0;
  int suffix = 0;
  for (std::size_t j = m; j-- > 0;) {
    exponent += local_.elements[wb[j]].degree * suffix;
    suffix += local_.elements[wa[j]].degree;
  }
  ModelElement out;
  Word next(m);
  std::function<void(std::size_t, int)> expand = [&](std::size_t i, int coefficient) {
    if (i == m) {
      if (auto ref = locate(next)) out[*ref] += coefficient;
      return;
    }
    for (const auto& [c, v] : local_.product[wa[i]][wb[i]]) {
      next[i] = static_cast<std::uint16_t>(c);
      expand(i + 1, coefficient * v);
    }
  };
  expand(0, sign_of(exponent));
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

IntVector DGAModel::multiply(const IntVector& a, int p, const IntVector& b, int q) const {
  IntVector out(complex_.rank(p + q), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      for (const auto& [ref, c] : product(BasisRef{p, i}, BasisRef{q, j})) {
        out[ref.index] += c * a[i] * b[j];
      }
    }
  }
  return out;
}

std::vector<CoproductTerm> DGAModel::coproduct(BasisRef x) const {
  if (!has_coproduct()) throw std::logic_error("model has no coproduct");
  const Word& w = word(x);
  const std::size_t m = w.size();
  std::map<std::pair<BasisRef, BasisRef>, Integer> acc;
  Word left(m);
  Word right(m);
  // sign: right_i moves past left_j for i < j
  std::function<void(std::size_t, int, int, int)> expand = [&](std::size_t i, int coefficient,
                                                               int right_degree, int exponent) {
    if (i == m) {
      auto l = locate(left);
      auto r = locate(right);
      if (l && r) acc[{*l, *r}] += sign_of(exponent) * coefficient;
      return;
    }
    for (const auto& term : local_.coproduct[w[i]]) {
      left[i] = static_cast<std::uint16_t>(term.left);
      right[i] = static_cast<std::uint16_t>(term.right);
      const int ld = local_.elements[term.left].degree;
      const int rd = local_.elements[term.right].degree;
      expand(i + 1, coefficient * term.coefficient, right_degree + rd,
             exponent + right_degree * ld);
    }
  };
  expand(0, 1, 0, 0);
  std::vector<CoproductTerm> out;
  for (auto& [key, c] : acc) {
    if (c != 0) out.push_back({key.first, key.second, c});
  }
  return out;
}

DGAModel build_model(const SimplicialComplex& sigma, const ModelVariant& variant) {
  if (variant.family == Family::HatB) {
    return build_hat_model(sigma, variant.arena.kind() == Arena::Kind::RealMod2);
  }
  DGAModel model(sigma, variant);
  model.complex().check(model.natural_coefficients());
  return model;
}

DGAModel build_hat_model(const SimplicialComplex& sigma, bool mod2) {
  DGAModel model(sigma, {Family::HatB, mod2 ? Arena::real_mod2() : Arena::real(), std::nullopt});
  model.complex().check(model.natural_coefficients());
  return model;
}

// ---------------------------------------------------------------------------
// Structural checks

namespace {

using Tensor = std::map<std::pair<BasisRef, BasisRef>, Integer>;

void reduce(ModelElement& e, const CoefficientRing& ring) {
  for (auto& [ref, c] : e) c = ring.reduce(c);
  std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
}

void reduce(Tensor& t, const CoefficientRing& ring) {
  for (auto& [key, c] : t) c = ring.reduce(c);
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
}

std::vector<BasisRef> all_refs(const DGAModel& model) {
  std::vector<BasisRef> out;
  const auto& c = model.complex();
  for (int k = c.min_degree(); k <= c.max_degree(); ++k) {
    for (std::size_t i = 0; i < c.rank(k); ++i) out.push_back({k, i});
  }
  return out;
}

}  // namespace

std::vector<std::string> leibniz_violations(const DGAModel& model) {
  std::vector<std::string> out;
  if (!model.has_product()) return out;
  const auto ring = model.natural_coefficients();
  const auto& c = model.complex();
  const int top = c.trusted_max();
  const auto refs = all_refs(model);
  for (const auto& a : refs) {
    const auto da = model.differential(a);
    for (const auto& b : refs) {
      if (a.degree + b.degree + 1 > top) continue;
      ModelElement lhs;
      for (const auto& [x, cx] : model.product(a, b)) {
        for (const auto& [y, cy] : model.differential(x)) lhs[y] += cx * cy;
      }
      ModelElement rhs;
      for (const auto& [x, cx] : da) {
        for (const auto& [y, cy] : model.product(x, b)) rhs[y] += cx * cy;
      }
      const int sign = a.degree % 2 == 0 ? 1 : -1;
      for (const auto& [x, cx] : model.differential(b)) {
        for (const auto& [y, cy] : model.product(a, x)) rhs[y] += sign * cx * cy;
      }
      reduce(lhs, ring);
      reduce(rhs, ring);
      if (lhs != rhs) {
        out.push_back("Leibniz fails for " + model.label(a) + " * " + model.label(b));
      }
    }
  }
  return out;
}

std::vector<std::string> coleibniz_violations(const DGAModel& model) {
  std::vector<std::string> out;
  if (!model.has_coproduct()) return out;
  const auto ring = model.natural_coefficients();
  for (const auto& x : all_refs(model)) {
    Tensor lhs;
    for (const auto& [y, cy] : model.differential(x)) {
      for (const auto& t : model.coproduct(y)) lhs[{t.left, t.right}] += cy * t.coefficient;
    }
    Tensor rhs;
    for (const auto& t : model.coproduct(x)) {
      for (const auto& [l, cl] : model.differential(t.left)) {
        rhs[{l, t.right}] += t.coefficient * cl;
      }
      const int sign = t.left.degree % 2 == 0 ? 1 : -1;
      for (const auto& [r, cr] : model.differential(t.right)) {
        rhs[{t.left, r}] += sign * t.coefficient * cr;
      }
    }
    reduce(lhs, ring);
    reduce(rhs, ring);
    if (lhs != rhs) out.push_back("co-Leibniz fails for " + model.label(x));
  }
  return out;
}

std::vector<std::string> duality_violations(const SimplicialComplex& sigma, const Arena& arena) {
  const DGAModel b = build_model(sigma, {Family::B, arena, std::nullopt});
  const DGAModel l = build_model(sigma, {Family::L, arena, std::nullopt});
  std::vector<std::string> out;
  // ε(w) = (-1)^{Σ_{i<j} |w_i||w_j|}, times (-1)^{#t} for odd n.
  auto epsilon = [&](BasisRef ref) {
    const Word& w = l.word(ref);
    int exponent = 0;
    int prefix = 0;
    int tops = 0;
    for (std::uint16_t x : w) {
      const int d = l.local().elements[x].degree;
      exponent += prefix * d;
      prefix += d;
      if (l.local().elements[x].in_face) ++tops;
    }
    if (arena.kind() == Arena::Kind::Odd) exponent += tops;
    return sign_of(exponent);
  };
  for (const auto& ref : all_refs(b)) {
    auto lref = l.locate(b.word(ref));
    if (!lref || lref->degree != ref.degree || lref->index != ref.index) {
      out.push_back("B and L bases differ at " + b.label(ref));
      return out;
    }
  }
  const BasedComplex dual = dualize(l.complex());
  for (int k = 0; k <= b.complex().max_degree(); ++k) {
    if (!b.complex().in_range(k + 1)) continue;
    const IntMatrix& db = b.complex().differential(k);
    const IntMatrix& dl = dual.differential(k);
    for (std::size_t j = 0; j < db.cols(); ++j) {
      for (std::size_t i = 0; i < db.rows(); ++i) {
        const Integer want = dl.at(i, j) * epsilon({k + 1, i}) * epsilon({k, j});
        if (db.at(i, j) != want) {
          out.push_back("differential of B differs from the dual of L at " +
                        b.label(BasisRef{k, j}) + " -> " + b.label(BasisRef{k + 1, i}));
        }
      }
    }
  }
  // B product constant P^z_{xy} against the L coproduct constant of z at x⊗y.
  std::map<std::tuple<BasisRef, BasisRef, BasisRef>, Integer> coproduct_constants;
  for (const auto& z : all_refs(l)) {
    for (const auto& t : l.coproduct(z)) coproduct_constants[{t.left, t.right, z}] = t.coefficient;
  }
  std::map<std::tuple<BasisRef, BasisRef, BasisRef>, Integer> product_constants;
  for (const auto& x : all_refs(b)) {
    for (const auto& y : all_refs(b)) {
      for (const auto& [z, c] : b.product(x, y)) {
        const int sign = epsilon(x) * epsilon(y) * epsilon(z) * sign_of(x.degree * y.degree);
        product_constants[{x, y, z}] = sign * c;
      }
    }
  }
  if (product_constants != coproduct_constants) {
    for (const auto& [key, c] : product_constants) {
      auto it = coproduct_constants.find(key);
      if (it == coproduct_constants.end() || it->second != c) {
        out.push_back("product constant of B at " + b.label(std::get<0>(key)) + " * " +
                      b.label(std::get<1>(key)) + " -> " + b.label(std::get<2>(key)) +
                      " differs from the L coproduct");
      }
    }
    for (const auto& [key, c] : coproduct_constants) {
      if (!product_constants.count(key)) {
        out.push_back("L coproduct constant of " + l.label(std::get<2>(key)) + " at " +
                      l.label(std::get<0>(key)) + " ⊗ " + l.label(std::get<1>(key)) +
                      " has no B product counterpart");
      }
    }
  }
  return out;
}

std::vector<std::string> inclusion_violations(const DGAModel& l_model, const DGAModel& k_model) {
  std::vector<std::string> out;
  std::map<std::string, BasisRef> k_by_label;
  for (const auto& ref : all_refs(k_model)) k_by_label.emplace(k_model.label(ref), ref);
  auto image = [&](BasisRef ref) -> std::optional<BasisRef> {
    auto it = k_by_label.find(l_model.label(ref));
    if (it == k_by_label.end()) return std::nullopt;
    return it->second;
  };
  for (const auto& x : all_refs(l_model)) {
    auto ix = image(x);
    if (!ix) {
      if (x.degree <= k_model.complex().max_degree()) {
        out.push_back(l_model.label(x) + " has no image in K");
      }
      continue;
    }
    if (ix->degree != x.degree) out.push_back(l_model.label(x) + " changes degree");
    ModelElement lhs;
    for (const auto& [y, c] : l_model.differential(x)) {
      auto iy = image(y);
      if (iy) lhs[*iy] += c;
    }
    if (lhs != k_model.differential(*ix)) {
      out.push_back("inclusion does not commute with d at " + l_model.label(x));
    }
    Tensor lt;
    for (const auto& t : l_model.coproduct(x)) {
      auto a = image(t.left);
      auto b = image(t.right);
      if (a && b) lt[{*a, *b}] += t.coefficient;
    }
    Tensor kt;
    for (const auto& t : k_model.coproduct(*ix)) kt[{t.left, t.right}] += t.coefficient;
    if (lt != kt) out.push_back("inclusion does not commute with Δ at " + l_model.label(x));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tensor factorization

TensorFactorization tensor_factorization(int m, IndexSet simplex, Family family,
                                         const Arena& arena, std::optional<int> truncation) {
  const SimplicialComplex sigma = SimplicialComplex::from_facets(m, {simplex});
  const ModelVariant variant{family, arena, truncation};
  const DGAModel model = build_model(sigma, variant);
  std::vector<DGAModel> factors;
  for (int i = 1; i <= m; ++i) {
    factors.push_back(build_model(
        simplex.contains(i) ? SimplicialComplex::simplex(1) : SimplicialComplex::empty(1),
        variant));
  }
  TensorFactorization out;
  const std::optional<int> cap = model.variant().truncation;
  BasedComplex product = factors.empty() ? model.complex() : factors.front().complex();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    product = tensor_product(product, factors[i].complex(), cap);
  }
  for (const auto& f : factors) {
    std::vector<std::size_t> ranks;
    for (int k = 0; k <= f.complex().max_degree(); ++k) ranks.push_back(f.complex().rank(k));
    out.factor_ranks.push_back(std::move(ranks));
  }
  for (int k = 0; k <= product.max_degree(); ++k) out.product_ranks.push_back(product.rank(k));
  for (int k = 0; k <= model.complex().max_degree(); ++k) {
    out.model_ranks.push_back(model.complex().rank(k));
  }
  while (!out.product_ranks.empty() && out.product_ranks.back() == 0) out.product_ranks.pop_back();
  while (!out.model_ranks.empty() && out.model_ranks.back() == 0) out.model_ranks.pop_back();

  // Basis bijection word -> tensor label.
  std::map<BasisRef, std::size_t> to_product;
  bool bijective = out.product_ranks == out.model_ranks;
  for (const auto& ref : all_refs(model)) {
    const Word& w = model.word(ref);
    std::string joined;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto fref = factors[i].locate(Word{w[i]});
      if (!fref) {
        bijective = false;
        break;
      }
      joined += (i ? "|" : "") + factors[i].label(*fref);
    }
    auto idx = product.find(ref.degree, joined);
    if (!bijective || !idx) {
      bijective = false;
      break;
    }
    to_product[ref] = *idx;
  }
  out.degrees_match = bijective;
  if (!bijective) return out;

  bool same = true;
  const int dir = model.complex().direction();
  for (int k = 0; k <= model.complex().max_degree() && same; ++k) {
    if (!model.complex().in_range(k + dir) || !product.in_range(k + dir)) continue;
    const IntMatrix& dm = model.complex().differential(k);
    const IntMatrix& dp = product.differential(k);
    for (std::size_t j = 0; j < dm.cols() && same; ++j) {
      const std::size_t pj = to_product.at({k, j});
      IntMatrix::Column mapped;
      for (const auto& [i, v] : dm.column(j)) mapped.emplace_back(to_product.at({k + dir, i}), v);
      std::sort(mapped.begin(), mapped.end());
      same = mapped == dp.column(pj);
    }
  }
  out.differentials_match = same;
  return out;
}

// ---------------------------------------------------------------------------
// Mayer–Vietoris

namespace {

IntMatrix full_differential(const BasedComplex& c, int k) {
  const int target = k + c.direction();
  if (c.in_range(k) && c.in_range(target)) return c.differential(k);
  return IntMatrix(c.rank(target), c.rank(k));
}

IntMatrix direct_sum_apply(const IntMatrix& d1, const IntMatrix& d2) {
  IntMatrix out(d1.rows() + d2.rows(), d1.cols() + d2.cols());
  for (std::size_t j = 0; j < d1.cols(); ++j) out.set_column(j, d1.column(j));
  for (std::size_t j = 0; j < d2.cols(); ++j) {
    IntMatrix::Column c;
    for (const auto& [i, v] : d2.column(j)) c.emplace_back(d1.rows() + i, v);
    out.set_column(d1.cols() + j, std::move(c));
  }
  return out;
}

}  // namespace

MayerVietoris mv_short_exact_sequences(const SimplicialComplex& first,
                                       const SimplicialComplex& second, Family family,
                                       const Arena& arena, std::optional<int> truncation) {
  if (family != Family::K && family != Family::L) {
    throw std::invalid_argument("Mayer–Vietoris sequences are built for the K- and L-models");
  }
  if (first.ground_size() != second.ground_size()) {
    throw std::invalid_argument("Mayer–Vietoris: subcomplexes must share the ground set");
  }
  const ModelVariant v{family, arena, truncation};
  MayerVietoris mv{build_model(intersection(first, second), v), build_model(first, v),
                   build_model(second, v), build_model(union_of(first, second), v), {}, {}};
  const int top = mv.union_model.complex().max_degree();
  for (int k = 0; k <= top; ++k) {
    const std::size_t r1 = mv.first.complex().rank(k);
    const std::size_t r2 = mv.second.complex().rank(k);
    IntMatrix inc(r1 + r2, mv.intersection.complex().rank(k));
    for (std::size_t j = 0; j < inc.cols(); ++j) {
      const Word& w = mv.intersection.word({k, j});
      auto a = mv.first.locate(w);
      auto b = mv.second.locate(w);
      if (!a || !b) throw std::logic_error("intersection word missing from a summand");
      inc.set_column(j, {{a->index, Integer(1)}, {r1 + b->index, Integer(1)}});
    }
    IntMatrix diff(mv.union_model.complex().rank(k), r1 + r2);
    for (std::size_t j = 0; j < r1 + r2; ++j) {
      const bool in_first = j < r1;
      const Word& w = in_first ? mv.first.word({k, j}) : mv.second.word({k, j - r1});
      auto u = mv.union_model.locate(w);
      if (!u) throw std::logic_error("summand word missing from the union");
      diff.set_column(j, {{u->index, Integer(in_first ? 1 : -1)}});
    }
    mv.inclusion.emplace(k, std::move(inc));
    mv.difference.emplace(k, std::move(diff));
  }
  return mv;
}

namespace {

// Basis positions grouped by multidegree; the MV maps never mix groups.
using Blocks = std::map<Multidegree, std::vector<std::size_t>>;

void add_blocks(Blocks& blocks, const BasedComplex& c, int k, std::size_t offset) {
  if (!c.in_range(k)) return;
  const auto& basis = c.basis(k);
  for (std::size_t i = 0; i < basis.size(); ++i) blocks[basis[i].multidegree].push_back(offset + i);
}

std::size_t block_nonzeros(const IntMatrix& m, const Blocks& rows, const Blocks& cols) {
  std::size_t total = 0;
  for (const auto& [key, col_ids] : cols) {
    auto it = rows.find(key);
    if (it == rows.end()) continue;
    total += IntMatrix::from_dense(m.dense_block(it->second, col_ids)).nonzeros();
  }
  return total;
}

IntMatrix block(const IntMatrix& m, const Blocks& rows, const Blocks& cols, const Multidegree& key) {
  static const std::vector<std::size_t> none;
  auto r = rows.find(key);
  auto c = cols.find(key);
  const auto& row_ids = r == rows.end() ? none : r->second;
  const auto& col_ids = c == cols.end() ? none : c->second;
  IntMatrix out(row_ids.size(), col_ids.size());
  if (!row_ids.empty() && !col_ids.empty()) out = IntMatrix::from_dense(m.dense_block(row_ids, col_ids));
  return out;
}

}  // namespace

std::vector<std::string> mv_exactness_violations(const MayerVietoris& mv) {
  std::vector<std::string> out;
  const auto rational = CoefficientRing::rationals();
  const int dir = mv.union_model.complex().direction();
  for (const auto& [k, inc] : mv.inclusion) {
    const IntMatrix& diff = mv.difference.at(k);
    const std::string at = " in degree " + std::to_string(k);
    if (!(diff * inc).is_zero()) out.push_back("difference ∘ inclusion != 0" + at);

    Blocks cap, mid, cup;
    add_blocks(cap, mv.intersection.complex(), k, 0);
    add_blocks(mid, mv.first.complex(), k, 0);
    add_blocks(mid, mv.second.complex(), k, mv.first.complex().in_range(k) ? mv.first.complex().rank(k) : 0);
    add_blocks(cup, mv.union_model.complex(), k, 0);
    if (block_nonzeros(inc, mid, cap) != inc.nonzeros() ||
        block_nonzeros(diff, cup, mid) != diff.nonzeros()) {
      out.push_back("maps do not preserve the multidegree" + at);
      continue;
    }
    std::set<Multidegree> keys;
    for (const auto* b : {&cap, &mid, &cup}) {
      for (const auto& [key, ids] : *b) keys.insert(key);
    }
    for (const auto& key : keys) {
      const IntMatrix i_block = block(inc, mid, cap, key);
      const IntMatrix d_block = block(diff, cup, mid, key);
      const std::size_t ri = rank_over(i_block, rational);
      const std::size_t rd = rank_over(d_block, rational);
      if (ri != i_block.cols()) out.push_back("inclusion not injective" + at);
      if (rd != d_block.rows()) out.push_back("difference not surjective" + at);
      for (const auto& d : invariant_factors(d_block)) {
        if (d != 1) out.push_back("difference not surjective over Z" + at);
      }
      if (ri + rd != i_block.rows()) out.push_back("rank(ker) != rank(im)" + at);
      for (const auto& v : kernel_basis(d_block)) {
        if (!solve_with_image(i_block, v)) {
          out.push_back("kernel vector outside the image lattice" + at);
          break;
        }
      }
    }
    // chain maps
    if (mv.inclusion.count(k + dir)) {
      const IntMatrix d_mid = direct_sum_apply(full_differential(mv.first.complex(), k),
                                               full_differential(mv.second.complex(), k));
      const IntMatrix d_cap = full_differential(mv.intersection.complex(), k);
      const IntMatrix d_cup = full_differential(mv.union_model.complex(), k);
      if (!(mv.inclusion.at(k + dir) * d_cap == d_mid * inc)) {
        out.push_back("inclusion is not a chain map" + at);
      }
      if (!(mv.difference.at(k + dir) * d_mid == d_cup * diff)) {
        out.push_back("difference is not a chain map" + at);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hochster components

namespace {

void require_squarefree(const DGAModel& model) {
  const Family f = model.variant().family;
  if (f != Family::B && f != Family::L && f != Family::HatB) {
    throw std::invalid_argument("Hochster components need a squarefree multigrading (B or L)");
  }
}

std::vector<BasisRef> component_refs(const DGAModel& model, IndexSet alpha) {
  std::vector<BasisRef> out;
  for (const auto& ref : all_refs(model)) {
    if (model.support(model.word(ref)) == alpha) out.push_back(ref);
  }
  return out;
}

}  // namespace

std::map<IndexSet, BasedComplex> hochster_components(const DGAModel& model) {
  require_squarefree(model);
  const auto& c = model.complex();
  std::map<IndexSet, std::vector<std::vector<BasisRef>>> grouped;
  const auto degrees = static_cast<std::size_t>(c.max_degree() + 1);
  for (const auto& ref : all_refs(model)) {
    auto& slots = grouped[model.support(model.word(ref))];
    slots.resize(degrees);
    slots[static_cast<std::size_t>(ref.degree)].push_back(ref);
  }
  std::map<IndexSet, BasedComplex> out;
  for (const auto& [alpha, slots] : grouped) {
    std::vector<std::vector<BasisElement>> bases(degrees);
    std::map<BasisRef, std::size_t> local_index;
    for (std::size_t k = 0; k < degrees; ++k) {
      for (const auto& ref : slots[k]) {
        local_index[ref] = bases[k].size();
        bases[k].push_back(c.basis(ref.degree)[ref.index]);
      }
    }
    BasedComplex component(c.direction(), 0, std::move(bases));
    for (int k = 0; k <= c.max_degree(); ++k) {
      if (!component.in_range(k + c.direction())) continue;
      IntMatrix d(component.rank(k + c.direction()), component.rank(k));
      for (const auto& ref : slots[static_cast<std::size_t>(k)]) {
        IntMatrix::Column col;
        for (const auto& [i, v] : c.differential(k).column(ref.index)) {
          col.emplace_back(local_index.at({k + c.direction(), i}), v);
        }
        d.set_column(local_index.at(ref), std::move(col));
      }
      component.set_differential(k, std::move(d));
    }
    component.check(model.natural_coefficients());
    out.emplace(alpha, std::move(component));
  }
  return out;
}

int hochster_shift(const Arena& arena, IndexSet alpha) {
  return arena.is_real() ? 0 : (arena.n() - 1) * alpha.size();
}

ComponentIsomorphism component_isomorphism(const DGAModel& model, const DGAModel& hat_model,
                                           IndexSet alpha) {
  require_squarefree(model);
  if (hat_model.variant().family != Family::HatB || hat_model.ground_size() != alpha.size()) {
    throw std::invalid_argument("component_isomorphism: expects the hatB model of the restriction");
  }
  ComponentIsomorphism iso;
  iso.alpha = alpha;
  iso.shift = model.variant().family == Family::HatB ? 0 : hochster_shift(model.variant().arena, alpha);
  const auto elements = alpha.elements();
  const bool hat_source = model.variant().family == Family::HatB;
  std::map<BasisRef, BasisRef> matched;
  for (const auto& ref : component_refs(model, alpha)) {
    const Word& w = model.word(ref);
    Word hw;
    for (int i : elements) {
      const int letter = w[static_cast<std::size_t>(i - 1)];
      hw.push_back(static_cast<std::uint16_t>(hat_source ? letter : letter - 1));
    }
    auto href = hat_model.locate(hw);
    if (!href || href->degree + iso.shift != ref.degree) {
      throw std::logic_error("component word " + model.label(ref) + " has no hatB partner");
    }
    matched[ref] = *href;
  }
  if (matched.size() != hat_model.complex().total_rank()) {
    throw std::logic_error("component and hatB ranks differ for " + alpha.to_string());
  }
  // Cochain-direction entries (source, target) -> value for both sides.
  std::map<std::pair<BasisRef, BasisRef>, Integer> comp;
  const bool chain = model.complex().direction() == BasedComplex::kChain;
  for (const auto& [ref, href] : matched) {
    for (const auto& [y, c] : model.differential(ref)) {
      if (chain) {
        // dual differential from y* (degree k) to ref* (degree k + 1)
        const int k = y.degree;
        comp[{y, ref}] = (k % 2 == 0 ? -1 : 1) * c;
      } else {
        comp[{ref, y}] = c;
      }
    }
  }
  std::map<std::pair<BasisRef, BasisRef>, Integer> hat;
  for (const auto& [ref, href] : matched) {
    for (const auto& [y, c] : hat_model.differential(href)) hat[{href, y}] = c;
  }
  std::map<BasisRef, std::vector<std::pair<BasisRef, Integer>>> edges;
  for (const auto& [key, c] : comp) {
    auto it = hat.find({matched.at(key.first), matched.at(key.second)});
    if (it == hat.end()) throw std::logic_error("hatB differential misses a component entry");
    const Integer ratio = c * it->second;  // ±1 entries: product is the relative sign
    if (ratio != 1 && ratio != -1) throw std::logic_error("component entry is not ±1");
    edges[key.first].emplace_back(key.second, ratio);
    edges[key.second].emplace_back(key.first, ratio);
  }
  if (comp.size() != hat.size()) throw std::logic_error("hatB differential has extra entries");
  std::map<BasisRef, int> sign;
  for (const auto& [start, unused] : matched) {
    if (sign.count(start)) continue;
    sign[start] = 1;
    std::deque<BasisRef> queue{start};
    while (!queue.empty()) {
      const BasisRef x = queue.front();
      queue.pop_front();
      for (const auto& [y, ratio] : edges[x]) {
        const int want = sign[x] * (ratio > 0 ? 1 : -1);
        auto [it, inserted] = sign.emplace(y, want);
        if (inserted) {
          queue.push_back(y);
        } else if (it->second != want) {
          throw std::logic_error("no consistent sign twist for component " + alpha.to_string());
        }
      }
    }
  }
  for (const auto& [ref, href] : matched) {
    iso.to_hat[ref] = {href, sign.at(ref)};
    iso.from_hat[href] = {ref, sign.at(ref)};
  }
  return iso;
}

}  // namespace momentangle
