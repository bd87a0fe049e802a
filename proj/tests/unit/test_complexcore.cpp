#include <doctest.h>

#include <set>

#include "../support/oracles.hpp"
#include "momentangle/cochains.hpp"
#include "momentangle/random_complex.hpp"
#include "momentangle/simplicial_complex.hpp"

using namespace momentangle;

namespace {

SimplicialComplex two_points() { return SimplicialComplex::from_facets(2, {{1}, {2}}); }
SimplicialComplex four_cycle() {
  return SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

std::vector<std::size_t> free_ranks(const std::vector<CohomologyGroup>& groups) {
  std::vector<std::size_t> out;
  for (const auto& g : groups) out.push_back(g.free_rank);
  return out;
}

}  // namespace

TEST_CASE("index sets") {
  IndexSet a{1, 3};
  CHECK(a.size() == 2);
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(2));
  CHECK(a.to_string() == "{1,3}");
  CHECK(a.count_below(3) == 1);
  CHECK((a | IndexSet{2}) == IndexSet::range(3));
  CHECK(lex_less(IndexSet{1}, IndexSet{1, 2}));
  CHECK(lex_less(IndexSet{1, 2}, IndexSet{2}));
  CHECK(graded_lex_less(IndexSet{2}, IndexSet{1, 2}));
  CHECK(all_subsets(3).size() == 8);
  CHECK_THROWS_AS(IndexSet{0}, std::out_of_range);
}

TEST_CASE("from_facets") {
  SUBCASE("two points") {
    auto s = two_points();
    CHECK(s.faces() == std::vector<IndexSet>{IndexSet{}, IndexSet{1}, IndexSet{2}});
  }
  SUBCASE("one ghost vertex") {
    auto s = SimplicialComplex::from_facets(1, std::vector<IndexSet>{});
    CHECK(s.faces() == std::vector<IndexSet>{IndexSet{}});
    CHECK(s.vertex_set().empty());
    CHECK(s.dimension() == -1);
  }
  SUBCASE("full simplex") {
    auto s = SimplicialComplex::from_facets(3, {{1, 2, 3}});
    CHECK(s.faces().size() == 8);
    CHECK(s == SimplicialComplex::simplex(3));
  }
  SUBCASE("out of range") {
    CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {{0}}), std::out_of_range);
  }
  SUBCASE("not downward closed") {
    CHECK_THROWS_AS(SimplicialComplex(2, {IndexSet{}, IndexSet{1, 2}}), std::invalid_argument);
  }
}

TEST_CASE("full_subcomplex") {
  auto s = two_points();
  CHECK(s.full_subcomplex(IndexSet{1}).faces() == std::vector<IndexSet>{IndexSet{}, IndexSet{1}});
  CHECK(s.full_subcomplex(IndexSet{1, 2}) == s);
  CHECK(s.full_subcomplex(IndexSet{1}).ground_size() == 2);
  auto simplex = SimplicialComplex::simplex(3);
  CHECK(simplex.full_subcomplex(IndexSet{}).faces() == std::vector<IndexSet>{IndexSet{}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto r = random_complex(5, seed);
    CHECK(r.full_subcomplex(r.vertex_set()) == r);
  }
}

TEST_CASE("cone") {
  SUBCASE("empty complex") {
    auto p = cone(SimplicialComplex::empty(1));
    CHECK(p.ambient.faces().size() == 2);  // ∅ and the apex
    CHECK(p.sub.faces().size() == 1);
  }
  SUBCASE("two points") {
    auto p = cone(two_points());
    CHECK(p.ambient.faces_of_size(2).size() == 2);
    CHECK(p.ambient.faces_of_size(1).size() == 3);
    CHECK(p.sub.faces_of_size(1).size() == 2);
  }
  SUBCASE("triangle boundary") {
    auto p = cone(SimplicialComplex::simplex_boundary(3));
    CHECK(p.ambient.faces_of_size(3).size() == 3);
    CHECK(p.ambient.facets().size() == 3);
    CHECK(p.sub == SimplicialComplex::simplex_boundary(3).with_ground_size(4));
  }
}

TEST_CASE("barycentric_subdivision") {
  SUBCASE("two points") {
    auto b = barycentric_subdivision(two_points());
    CHECK(b.complex.vertex_set().size() == 2);
    CHECK(b.complex.faces_of_size(2).empty());
  }
  SUBCASE("edge is a path") {
    auto b = barycentric_subdivision(SimplicialComplex::simplex(2));
    CHECK(b.labels == std::vector<IndexSet>{IndexSet{1}, IndexSet{2}, IndexSet{1, 2}});
    CHECK(b.complex.faces_of_size(2).size() == 2);
  }
  SUBCASE("flags match brute-force enumeration") {
    for (const auto& sigma : {SimplicialComplex::simplex_boundary(3), four_cycle(),
                              SimplicialComplex::simplex_boundary(4), random_complex(4, 7)}) {
      auto b = barycentric_subdivision(sigma);
      const auto expected = oracle::flags(b.labels);
      std::set<std::uint64_t> got;
      for (IndexSet f : b.complex.faces()) {
        if (!f.empty()) got.insert(f.bits());
      }
      std::set<std::uint64_t> want;
      for (const auto& flag : expected) {
        std::uint64_t bits = 0;
        for (std::size_t i : flag) bits |= std::uint64_t{1} << i;
        want.insert(bits);
      }
      CHECK(got == want);
    }
    auto hexagon = barycentric_subdivision(SimplicialComplex::simplex_boundary(3));
    CHECK(hexagon.complex.faces_of_size(1).size() == 6);
    CHECK(hexagon.complex.faces_of_size(2).size() == 6);
  }
}

TEST_CASE("dual_blocks_pair") {
  SUBCASE("segment, both vertices") {
    auto p = dual_blocks_pair(two_points(), IndexSet{1, 2});
    // P is a path v_{1} - v_∅ - v_{2}; P_alpha is its two endpoints.
    CHECK(p.ambient.faces_of_size(1).size() == 3);
    CHECK(p.ambient.faces_of_size(2).size() == 2);
    CHECK(p.sub.faces_of_size(1).size() == 2);
    CHECK(p.sub.faces_of_size(2).empty());
    CHECK_FALSE(p.sub.contains(IndexSet{1}));  // the apex v_∅ is vertex 1
  }
  SUBCASE("segment, one vertex") {
    auto p = dual_blocks_pair(two_points(), IndexSet{1});
    CHECK(p.sub.faces_of_size(1).size() == 1);
  }
  SUBCASE("square boundary") {
    auto p = dual_blocks_pair(four_cycle(), IndexSet::range(4));
    // Subdivided boundary of the square: 8 vertices, 8 edges.
    CHECK(p.sub.faces_of_size(1).size() == 8);
    CHECK(p.sub.faces_of_size(2).size() == 8);
    CHECK(p.sub.faces_of_size(3).empty());
    auto h = relative_cohomology(SimplicialPair(p.sub, SimplicialComplex::empty(p.sub.ground_size())));
    CHECK(free_ranks(h) == std::vector<std::size_t>{1, 1});
  }
  SUBCASE("alpha must be within the ground set") {
    CHECK_THROWS(dual_blocks_pair(two_points(), IndexSet{3}));
  }
}

TEST_CASE("relative cochains of cone pairs") {
  SUBCASE("two points") {
    auto h = relative_cohomology(cone(two_points()));
    CHECK(free_ranks(h) == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("empty complex") {
    auto h = relative_cohomology(cone(SimplicialComplex::empty(1)));
    CHECK(free_ranks(h) == std::vector<std::size_t>{1});
  }
  SUBCASE("triangle boundary") {
    auto h = relative_cohomology(cone(SimplicialComplex::simplex_boundary(3)));
    CHECK(free_ranks(h) == std::vector<std::size_t>{0, 0, 1});
  }
  SUBCASE("matches the determinantal oracle") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      auto c = relative_cochain_complex(cone(random_complex(4, seed)));
      for (int k = c.min_degree(); k <= c.max_degree(); ++k) {
        auto g = homology(c, k);
        auto want = oracle::homology_shape(c, k);
        CHECK(g.free_rank == want.free_rank);
        CHECK(g.torsion == want.torsion);
      }
    }
  }
}

TEST_CASE("reduced cohomology") {
  SUBCASE("empty complex has H^-1") {
    auto h = reduced_cohomology(SimplicialComplex::empty(1));
    REQUIRE(h.size() == 1);
    CHECK(h[0].degree == -1);
    CHECK(h[0].free_rank == 1);
  }
  SUBCASE("S^0") {
    auto h = reduced_cohomology(two_points());
    CHECK(free_ranks(h) == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("4-cycle") {
    auto h = reduced_cohomology(four_cycle());
    CHECK(free_ranks(h) == std::vector<std::size_t>{0, 0, 1});
  }
}

TEST_CASE("cone pair shift identity") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto sigma = random_complex(5, seed);
    for (IndexSet alpha : all_subsets(5)) {
      auto sub = sigma.full_subcomplex(alpha);
      auto reduced = reduced_cohomology(sub);
      auto relative = relative_cohomology(cone(sub));
      // H^k(C S, S) = H~^{k-1}(S)
      for (int k = 0; k <= sub.dimension() + 1; ++k) {
        const auto& want = reduced[static_cast<std::size_t>(k)];
        CohomologyGroup got;
        if (static_cast<std::size_t>(k) < relative.size()) got = relative[static_cast<std::size_t>(k)];
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("barycentric subdivision preserves cohomology") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto sigma = random_complex(5, seed);
    if (sigma.dimension() < 0) continue;
    auto b = barycentric_subdivision(sigma);
    auto h = reduced_cohomology(sigma);
    auto hb = reduced_cohomology(b.complex);
    REQUIRE(h.size() == hb.size());
    for (std::size_t k = 0; k < h.size(); ++k) CHECK(h[k] == hb[k]);
  }
}

TEST_CASE("dual blocks retract to the boundary") {
  for (const auto& sigma : {two_points(), SimplicialComplex::simplex_boundary(3), four_cycle(),
                            SimplicialComplex::simplex_boundary(4)}) {
    auto p = dual_blocks_pair(sigma, sigma.vertex_set());
    auto lhs = relative_cohomology(p);
    auto rhs = relative_cohomology(cone(sigma));
    const std::size_t n = std::max(lhs.size(), rhs.size());
    for (std::size_t k = 0; k < n; ++k) {
      CohomologyGroup a = k < lhs.size() ? lhs[k] : CohomologyGroup{};
      CohomologyGroup b = k < rhs.size() ? rhs[k] : CohomologyGroup{};
      CHECK(a == b);
    }
  }
}

TEST_CASE("cup and pullback on the circle") {
  // Boundary of a triangle; cup of degree-0 unit with a 1-cocycle is itself.
  auto tri = SimplicialComplex::simplex_boundary(3);
  CochainModel model(SimplicialPair(tri, SimplicialComplex::empty(3)));
  IntVector unit(model.complex().rank(0), Integer(1));
  IntVector a(model.complex().rank(1), Integer(0));
  a[0] = 1;
  CHECK(model.cup(unit, 0, a, 1) == a);
  CHECK(model.cup(a, 1, unit, 0) == a);
  // The identity map pulls back to the identity.
  std::vector<int> identity{0, 1, 2, 3};
  CHECK(model.pullback_matrix(model, identity, 1) == IntMatrix::identity(3));
  // Swapping two vertices reverses the orientation of the edge between them.
  std::vector<int> swap{0, 2, 1, 3};
  const auto m = model.pullback_matrix(model, swap, 1);
  const auto e12 = *model.index_of(1, IndexSet{1, 2});
  CHECK(m.at(e12, e12) == -1);
}
