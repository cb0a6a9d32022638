#include <gtest/gtest.h>

#include "monoclean/monoclean.hpp"
#include "oracles.hpp"

using namespace monoclean;

namespace {

const VariableSet kXY({"x", "y"});
const VariableSet kX4 = VariableSet::numbered(4);

Monomial m(std::vector<long long> e) {
  std::vector<Exponent> v(e.begin(), e.end());
  return Monomial(std::move(v));
}

MonomialIdeal ideal(const VariableSet& vars, std::vector<std::vector<long long>> gens) {
  std::vector<Monomial> ms;
  for (auto& e : gens) ms.push_back(m(e));
  return MonomialIdeal(vars, std::move(ms));
}

Face face(std::vector<long long> entries) {  // -1 stands for infinity
  std::vector<Face::Entry> e;
  for (long long v : entries)
    e.push_back(v < 0 ? Face::Entry{} : Face::Entry{Exponent(v)});
  return Face(std::move(e));
}

MonomialIdeal square4() {
  return ideal(kX4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
}

MonomialIdeal rp2() {
  VariableSet v({"a", "b", "c", "d", "e", "f"});
  return ideal(v, {{1, 1, 0, 1, 0, 0},   // abd
                   {1, 1, 0, 0, 0, 1},   // abf
                   {1, 0, 1, 0, 1, 0},   // ace
                   {1, 0, 1, 1, 0, 0},   // acd
                   {1, 0, 0, 0, 1, 1},   // aef
                   {0, 1, 0, 1, 1, 0},   // bde
                   {0, 1, 1, 0, 0, 1},   // bcf
                   {0, 1, 1, 0, 1, 0},   // bce
                   {0, 0, 1, 1, 0, 1},   // cdf
                   {0, 0, 0, 1, 1, 1}}); // def
}

}  // namespace

TEST(FaceIn, Examples) {
  Multicomplex gamma{ideal(kXY, {{1, 1}})};
  EXPECT_TRUE(face_in(gamma, face({0, -1})));
  EXPECT_FALSE(face_in(gamma, face({1, 1})));
  EXPECT_TRUE(face_in(gamma, face({-1, 0})));
}

TEST(MaximalFacets, Examples) {
  auto top = maximal_facets(Multicomplex{ideal(kXY, {{1, 1}})});
  EXPECT_EQ(top, (std::vector<Face>{face({0, -1}), face({-1, 0})}));

  auto square = maximal_facets(Multicomplex{square4()});
  EXPECT_EQ(square, (std::vector<Face>{face({0, 0, -1, -1}), face({-1, -1, 0, 0})}));

  // a prime has the single facet: 0 on its variables, infinity elsewhere
  auto p = maximal_facets(Multicomplex{ideal(kXY, {{1, 0}})});
  EXPECT_EQ(p, std::vector<Face>{face({0, -1})});
}

TEST(Facets, Examples) {
  EXPECT_EQ(facets(Multicomplex{ideal(kXY, {{1, 1}})}),
            (std::vector<Face>{face({0, -1}), face({-1, 0})}));
  EXPECT_EQ(facets(Multicomplex{ideal(kXY, {{2, 0}, {1, 1}})}),
            (std::vector<Face>{face({0, -1}), face({1, 0})}));
  EXPECT_EQ(facets(Multicomplex{square4()}),
            (std::vector<Face>{face({0, 0, -1, -1}), face({-1, -1, 0, 0})}));
}

TEST(Facets, EveryFacetSitsUnderMaximalWithSameInfiniteSet) {
  auto cases = {ideal(kXY, {{2, 0}, {1, 1}}), square4(),
                ideal(VariableSet::numbered(3), {{2, 1, 0}, {0, 1, 2}, {1, 0, 1}})};
  for (const auto& I : cases) {
    auto top = maximal_facets(Multicomplex{I});
    for (const auto& a : facets(Multicomplex{I})) {
      bool witnessed = false;
      for (const auto& mfacet : top)
        if (a.leq(mfacet) && a.infinite_part() == mfacet.infinite_part()) witnessed = true;
      EXPECT_TRUE(witnessed);
    }
  }
}

TEST(Facets, BruteForceOracleExhaustive) {
  // all ideals on <= 3 variables with exponents <= 3 and <= 3 generators,
  // sampled densely but deterministically
  Rng rng(23);
  VariableSet vars = VariableSet::numbered(3);
  for (int iter = 0; iter < 400; ++iter) {
    MonomialIdeal I = random_ideal(rng, vars, 3, 3);
    EXPECT_EQ(facets(Multicomplex{I}), oracles::brute_facets(I)) << format_ideal(I);
  }
}

TEST(Facets, FacetCountEqualsMinOfPolarization) {
  Rng rng(29);
  VariableSet vars = VariableSet::numbered(3);
  for (int iter = 0; iter < 200; ++iter) {
    MonomialIdeal I = random_ideal(rng, vars, 4, 6);
    auto [ring, Ip] = polarize_ideal(I);
    EXPECT_EQ(facets(Multicomplex{I}).size(), minimal_primes(Ip).size()) << format_ideal(I);
  }
}

TEST(Beta, Examples) {
  PolarizedRing unit_ring(kXY, {1, 1});
  EXPECT_EQ(beta(face({0, -1}), unit_ring), PrimeSupport(2, {0}));
  PolarizedRing ring(kXY, {2, 1});
  // (1,0) -> {x_{1,2}, x_{2,1}}
  EXPECT_EQ(beta(face({1, 0}), ring), PrimeSupport(3, {1, 2}));
  EXPECT_THROW(beta(face({2, 0}), ring), std::invalid_argument);
}

TEST(Beta, RoundTrip) {
  PolarizedRing ring(VariableSet::numbered(3), {3, 2, 2});
  std::vector<Face> faces = {face({0, -1, 1}), face({2, 1, -1}), face({-1, -1, -1}),
                             face({1, 0, 0})};
  for (const auto& a : faces) EXPECT_EQ(beta_inv(beta(a, ring), ring), a);
}

TEST(Simplicial, FromSquarefree) {
  auto complex = simplicial_from_squarefree(square4());
  EXPECT_EQ(complex.facets, (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));

  auto edge = simplicial_from_squarefree(ideal(kXY, {{1, 1}}));
  EXPECT_EQ(edge.facets, (std::vector<std::vector<int>>{{0}, {1}}));

  EXPECT_THROW(simplicial_from_squarefree(ideal(kXY, {{2, 0}})), std::invalid_argument);
}

TEST(Simplicial, Rp2FacetsAreTheTenComplementaryTriangles) {
  auto I = rp2();
  auto complex = simplicial_from_squarefree(I);
  ASSERT_EQ(complex.facets.size(), 10u);
  // the facets are exactly the 3-sets that are not generator supports
  std::set<std::vector<int>> nonfaces;
  for (const auto& g : I.generators()) nonfaces.insert(g.support());
  for (const auto& f : complex.facets) {
    EXPECT_EQ(f.size(), 3u);
    EXPECT_FALSE(nonfaces.count(f));
  }
}

TEST(ShellingOrder, Examples) {
  SimplicialComplex single{kXY, {{0}}};
  auto ok = is_shelling_order(single, {{0}});
  ASSERT_TRUE(ok);
  EXPECT_EQ(ok->restriction_faces, std::vector<std::vector<int>>{{}});

  SimplicialComplex two_edges{kX4, {{0, 1}, {2, 3}}};
  EXPECT_FALSE(is_shelling_order(two_edges, {{0, 1}, {2, 3}}));
  EXPECT_FALSE(is_shelling_order(two_edges, {{2, 3}, {0, 1}}));

  VariableSet v3 = VariableSet::numbered(3);
  SimplicialComplex triangle{v3, {{0, 1}, {1, 2}, {0, 2}}};
  auto sh = is_shelling_order(triangle, {{0, 1}, {1, 2}, {0, 2}});
  ASSERT_TRUE(sh);
  // hand enumeration: new faces of {0,2} at step 3 are exactly {{0,2}}
  EXPECT_EQ(sh->restriction_faces,
            (std::vector<std::vector<int>>{{}, {2}, {0, 2}}));

  EXPECT_THROW(is_shelling_order(triangle, {{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST(FindShelling, Examples) {
  SimplicialComplex two_edges{kX4, {{0, 1}, {2, 3}}};
  EXPECT_FALSE(find_shelling(two_edges));

  // boundary of a simplex is shellable
  VariableSet v4 = VariableSet::numbered(4);
  SimplicialComplex boundary{v4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  auto sh = find_shelling(boundary);
  ASSERT_TRUE(sh);
  EXPECT_TRUE(is_shelling_order(boundary, sh->facets));
}

TEST(FindShelling, Rp2IsNotShellable) {
  auto complex = simplicial_from_squarefree(rp2());
  EXPECT_FALSE(find_shelling(complex));
}

TEST(FindShelling, DeterministicAndOrderInsensitive) {
  VariableSet v4 = VariableSet::numbered(4);
  SimplicialComplex boundary{v4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  auto first = find_shelling(boundary);
  SimplicialComplex permuted{v4, {{1, 2, 3}, {0, 1, 3}, {0, 1, 2}, {0, 2, 3}}};
  auto second = find_shelling(permuted);
  ASSERT_TRUE(first);
  ASSERT_TRUE(second);
  EXPECT_EQ(first->facets, second->facets);
}

TEST(FindShelling, NonPureExample) {
  // a path with a pendant vertex: facets {0,1},{1,2},{3}
  VariableSet v4 = VariableSet::numbered(4);
  SimplicialComplex complex{v4, {{0, 1}, {1, 2}, {3}}};
  auto sh = find_shelling(complex);
  ASSERT_TRUE(sh);
  EXPECT_TRUE(is_shelling_order(complex, sh->facets));
}
