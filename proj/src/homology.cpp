#include "momentangle/homology.hpp"

#include <sstream>

#include "momentangle/parallel.hpp"

namespace momentangle {

namespace {

using BlockMap = std::map<Multidegree, std::vector<std::size_t>>;

BlockMap group_by_multidegree(const BasedComplex& complex, int degree) {
  BlockMap blocks;
  const auto& basis = complex.basis(degree);
  for (std::size_t i = 0; i < basis.size(); ++i) blocks[basis[i].multidegree].push_back(i);
  return blocks;
}

const std::vector<std::size_t>& lookup(const BlockMap& blocks, const Multidegree& key) {
  static const std::vector<std::size_t> kEmpty;
  auto it = blocks.find(key);
  return it == blocks.end() ? kEmpty : it->second;
}

struct BlockHomology {
  std::vector<Integer> orders;
  std::vector<IntVector> representatives;  // block-local
  DenseMatrix<Integer> projection;         // generators x block size
};

// Z = ker(outgoing) with basis K (columns of V past the rank of outgoing) and
// left inverse Kinv. Smith form of Kinv·incoming gives U' with generators
// K·U'^{-1} and coordinates U'·Kinv·z.
template <class Ops>
BlockHomology reduce_block(const Ops& ops, const DenseMatrix<Integer>& incoming,
                           const DenseMatrix<Integer>& outgoing, std::size_t n) {
  using Value = typename Ops::value_type;
  auto out_form = diagonalize(ops, convert(ops, outgoing), false, true);
  const std::size_t r = out_form.rank;
  const std::size_t kdim = n - r;
  DenseMatrix<Value> kernel(n, kdim, ops.zero());
  DenseMatrix<Value> kernel_inverse(kdim, n, ops.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < kdim; ++j) {
      kernel(i, j) = out_form.right(i, r + j);
      kernel_inverse(j, i) = out_form.right_inverse(r + j, i);
    }
  }
  auto in_form = diagonalize(ops, multiply(ops, kernel_inverse, convert(ops, incoming)), true,
                             false);
  const auto generators = multiply(ops, kernel, in_form.left_inverse);
  const auto projection = multiply(ops, in_form.left, kernel_inverse);

  BlockHomology out;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < kdim; ++i) {
    if (i < in_form.rank) {
      const Value& d = in_form.diagonal(i, i);
      if (ops.is_unit(d)) continue;
      out.orders.push_back(ops.to_integer(d));
    } else {
      out.orders.emplace_back(0);
    }
    kept.push_back(i);
  }
  out.projection = DenseMatrix<Integer>(kept.size(), n, Integer(0));
  for (std::size_t g = 0; g < kept.size(); ++g) {
    IntVector rep(n);
    for (std::size_t i = 0; i < n; ++i) {
      rep[i] = ops.to_integer(generators(i, kept[g]));
      out.projection(g, i) = ops.to_integer(projection(kept[g], i));
    }
    out.representatives.push_back(std::move(rep));
  }
  return out;
}

template <class Ops>
std::size_t block_rank(const Ops& ops, const DenseMatrix<Integer>& m) {
  return diagonalize(ops, convert(ops, m), false, false).rank;
}

}  // namespace

struct HomologyEngine::DegreeData {
  struct Block {
    Multidegree key;
    std::vector<std::size_t> ids;
    std::vector<std::size_t> previous_ids;
    std::size_t first_generator = 0;
    std::vector<Integer> orders;
    DenseMatrix<Integer> projection;
  };
  CohomologyGroup group;
  std::vector<Block> blocks;
  std::vector<std::size_t> block_of_index;
};

HomologyEngine::HomologyEngine(BasedComplex complex, CoefficientRing coefficients)
    : complex_(std::move(complex)), coefficients_(coefficients) {}
HomologyEngine::~HomologyEngine() = default;
HomologyEngine::HomologyEngine(HomologyEngine&&) noexcept = default;
HomologyEngine& HomologyEngine::operator=(HomologyEngine&&) noexcept = default;

HomologyEngine::DegreeData& HomologyEngine::data(int degree) {
  complex_.require_trusted(degree);
  auto it = cache_.find(degree);
  if (it != cache_.end()) return *it->second;

  const int dir = complex_.direction();
  const BlockMap here = group_by_multidegree(complex_, degree);
  const BlockMap before = group_by_multidegree(complex_, degree - dir);
  const BlockMap after = group_by_multidegree(complex_, degree + dir);
  const IntMatrix& in_matrix = complex_.differential(degree - dir);
  const IntMatrix& out_matrix = complex_.differential(degree);

  auto result = std::make_unique<DegreeData>();
  std::vector<std::pair<Multidegree, std::vector<std::size_t>>> keyed(here.begin(), here.end());
  std::vector<BlockHomology> reduced(keyed.size());
  std::vector<std::vector<std::size_t>> previous(keyed.size());

  parallel_for(keyed.size(), [&](std::size_t b) {
    const auto& [key, ids] = keyed[b];
    previous[b] = lookup(before, key);
    const auto& next = lookup(after, key);
    DenseMatrix<Integer> incoming = complex_.in_range(degree - dir)
                                        ? in_matrix.dense_block(ids, previous[b])
                                        : DenseMatrix<Integer>(ids.size(), 0);
    DenseMatrix<Integer> outgoing = complex_.in_range(degree + dir)
                                        ? out_matrix.dense_block(next, ids)
                                        : DenseMatrix<Integer>(0, ids.size());
    if (coefficients_.kind() == CoefficientRing::Kind::PrimeField) {
      reduced[b] = reduce_block(PrimeFieldOps(coefficients_.characteristic()), incoming,
                                outgoing, ids.size());
    } else {
      reduced[b] = reduce_block(IntegerOps{}, incoming, outgoing, ids.size());
    }
  });

  auto& group = result->group;
  group.degree = degree;
  result->block_of_index.assign(complex_.rank(degree), 0);
  std::vector<Integer> torsion_orders;
  for (std::size_t b = 0; b < keyed.size(); ++b) {
    auto& red = reduced[b];
    DegreeData::Block block;
    block.key = keyed[b].first;
    block.ids = keyed[b].second;
    block.previous_ids = std::move(previous[b]);
    block.first_generator = group.generators.size();
    for (std::size_t i : block.ids) result->block_of_index[i] = result->blocks.size();
    std::vector<std::size_t> rows;
    for (std::size_t g = 0; g < red.orders.size(); ++g) {
      const bool torsion = red.orders[g] != 0;
      if (torsion && coefficients_.kind() == CoefficientRing::Kind::Rationals) continue;
      rows.push_back(g);
      HomologyGenerator gen;
      gen.order = red.orders[g];
      gen.multidegree = block.key;
      gen.representative.assign(complex_.rank(degree), Integer(0));
      for (std::size_t i = 0; i < block.ids.size(); ++i) {
        gen.representative[block.ids[i]] = red.representatives[g][i];
      }
      if (torsion) {
        torsion_orders.push_back(gen.order);
      } else {
        ++group.free_rank;
      }
      block.orders.push_back(gen.order);
      group.generators.push_back(std::move(gen));
    }
    block.projection = DenseMatrix<Integer>(rows.size(), block.ids.size(), Integer(0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t i = 0; i < block.ids.size(); ++i) {
        block.projection(r, i) = red.projection(rows[r], i);
      }
    }
    result->blocks.push_back(std::move(block));
  }
  group.torsion = canonical_torsion(torsion_orders);
  auto& slot = cache_[degree];
  slot = std::move(result);
  return *slot;
}

const CohomologyGroup& HomologyEngine::group(int degree) { return data(degree).group; }

bool HomologyEngine::is_cycle(int degree, const IntVector& v) const {
  if (v.size() != complex_.rank(degree)) {
    throw std::invalid_argument("is_cycle: vector has the wrong length");
  }
  if (!complex_.in_range(degree + complex_.direction())) return true;
  for (const auto& x : complex_.differential(degree).apply(v)) {
    if (coefficients_.reduce(x) != 0) return false;
  }
  return true;
}

IntVector HomologyEngine::coordinates(int degree, const IntVector& cycle) {
  if (!is_cycle(degree, cycle)) {
    std::ostringstream msg;
    msg << "coordinates: vector in degree " << degree << " is not a cycle";
    throw std::logic_error(msg.str());
  }
  DegreeData& d = data(degree);
  IntVector coords(d.group.generators.size(), Integer(0));
  for (const auto& block : d.blocks) {
    for (std::size_t g = 0; g < block.orders.size(); ++g) {
      Integer c = 0;
      for (std::size_t i = 0; i < block.ids.size(); ++i) {
        const Integer& z = cycle[block.ids[i]];
        if (z != 0) c += block.projection(g, i) * z;
      }
      const Integer& order = block.orders[g];
      if (order != 0) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), order.get_mpz_t());
      } else {
        c = coefficients_.reduce(c);
      }
      coords[block.first_generator + g] = c;
    }
  }
  return coords;
}

bool HomologyEngine::is_boundary(int degree, const IntVector& v) {
  if (!is_cycle(degree, v)) return false;
  DegreeData& d = data(degree);
  const int dir = complex_.direction();
  if (!complex_.in_range(degree - dir)) {
    for (const auto& x : v) {
      if (coefficients_.reduce(x) != 0) return false;
    }
    return true;
  }
  const IntMatrix& in_matrix = complex_.differential(degree - dir);
  for (const auto& block : d.blocks) {
    const auto incoming = in_matrix.dense_block(block.ids, block.previous_ids);
    IntVector local(block.ids.size());
    for (std::size_t i = 0; i < block.ids.size(); ++i) local[i] = v[block.ids[i]];
    bool solvable = false;
    switch (coefficients_.kind()) {
      case CoefficientRing::Kind::Integers:
        solvable = solve(IntegerOps{}, incoming, local).has_value();
        break;
      case CoefficientRing::Kind::Rationals: {
        RationalOps ops;
        std::vector<mpq_class> rhs(local.begin(), local.end());
        solvable = solve(ops, convert(ops, incoming), rhs).has_value();
        break;
      }
      case CoefficientRing::Kind::PrimeField: {
        PrimeFieldOps ops(coefficients_.characteristic());
        std::vector<std::int64_t> rhs;
        for (const auto& x : local) rhs.push_back(ops.from_integer(x));
        solvable = solve(ops, convert(ops, incoming), rhs).has_value();
        break;
      }
    }
    if (!solvable) return false;
  }
  return true;
}

IntVector HomologyEngine::combination(int degree, const IntVector& coords) {
  const auto& gens = group(degree).generators;
  if (coords.size() != gens.size()) {
    throw std::invalid_argument("combination: coordinate vector has the wrong length");
  }
  IntVector out(complex_.rank(degree), Integer(0));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (coords[g] == 0) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coords[g] * gens[g].representative[i];
  }
  for (auto& x : out) x = coefficients_.reduce(x);
  return out;
}

CohomologyGroup homology(const BasedComplex& complex, int degree,
                         const CoefficientRing& coefficients) {
  HomologyEngine engine(complex, coefficients);
  return engine.group(degree);
}

std::size_t field_betti_number(const BasedComplex& complex, int degree,
                               const CoefficientRing& field) {
  complex.require_trusted(degree);
  const int dir = complex.direction();
  const BlockMap here = group_by_multidegree(complex, degree);
  const BlockMap before = group_by_multidegree(complex, degree - dir);
  const BlockMap after = group_by_multidegree(complex, degree + dir);
  std::size_t total = 0;
  for (const auto& [key, ids] : here) {
    std::size_t dim = ids.size();
    const auto& prev = lookup(before, key);
    const auto& next = lookup(after, key);
    if (complex.in_range(degree - dir) && !prev.empty()) {
      const auto incoming = complex.differential(degree - dir).dense_block(ids, prev);
      dim -= field.kind() == CoefficientRing::Kind::PrimeField
                 ? block_rank(PrimeFieldOps(field.characteristic()), incoming)
                 : block_rank(RationalOps{}, incoming);
    }
    if (complex.in_range(degree + dir) && !next.empty()) {
      const auto outgoing = complex.differential(degree).dense_block(next, ids);
      dim -= field.kind() == CoefficientRing::Kind::PrimeField
                 ? block_rank(PrimeFieldOps(field.characteristic()), outgoing)
                 : block_rank(RationalOps{}, outgoing);
    }
    total += dim;
  }
  return total;
}

std::size_t universal_coefficient_rank(const CohomologyGroup& integral,
                                       const CohomologyGroup& integral_target, std::int64_t p) {
  const Integer prime(static_cast<long>(p));
  auto divisible = [&](const std::vector<Integer>& torsion) {
    std::size_t count = 0;
    for (const auto& d : torsion) {
      if (mpz_divisible_p(d.get_mpz_t(), prime.get_mpz_t()) != 0) ++count;
    }
    return count;
  };
  return integral.free_rank + divisible(integral.torsion) + divisible(integral_target.torsion);
}

}  // namespace momentangle
