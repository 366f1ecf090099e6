#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lieq/chevalley.hpp"

using namespace lieq;

namespace {

LieElement basis_elt(const ChevalleyAlgebra& g, int i) {
  QVec v(g.dim(), Rat(0));
  v[i] = 1;
  return g.element(v);
}

void check_jacobi_exhaustive(const ChevalleyAlgebra& g) {
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a + 1; b < g.dim(); ++b)
      for (int c = b + 1; c < g.dim(); ++c) {
        LieElement xa = basis_elt(g, a), xb = basis_elt(g, b), xc = basis_elt(g, c);
        LieElement sum = g.bracket(xa, g.bracket(xb, xc));
        sum += g.bracket(xb, g.bracket(xc, xa));
        sum += g.bracket(xc, g.bracket(xa, xb));
        REQUIRE(sum.is_zero());
      }
}

void check_antisymmetry(const ChevalleyAlgebra& g) {
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a; b < g.dim(); ++b) {
      LieElement xa = basis_elt(g, a), xb = basis_elt(g, b);
      LieElement lhs = g.bracket(xa, xb);
      LieElement rhs = g.bracket(xb, xa).scaled(Rat(-1));
      REQUIRE(lhs == rhs);
    }
}

LieElement random_element(const ChevalleyAlgebra& g, std::mt19937_64& rng) {
  QVec v(g.dim(), Rat(0));
  for (int i = 0; i < g.dim(); ++i) v[i] = Rat(long(rng() % 7) - 3);
  return g.element(v);
}

}  // namespace

TEST_CASE("A1 is sl2") {
  ChevalleyAlgebra g = ChevalleyAlgebra::build(RootSystem::build({{'A', 1}}));
  CHECK(g.dim() == 3);
  LieElement e = g.e(0), f = g.e(1), h = g.h(0);
  CHECK(g.bracket(e, f) == h);
  CHECK(g.bracket(h, e) == e.scaled(Rat(2)));
  CHECK(g.bracket(h, f) == f.scaled(Rat(-2)));
}

TEST_CASE("A2 structure constants are +-1") {
  RootSystem rs = RootSystem::build({{'A', 2}});
  ChevalleyAlgebra g = ChevalleyAlgebra::build(rs);
  CHECK(g.dim() == 8);
  for (int a = 0; a < rs.num_roots(); ++a)
    for (int b = 0; b < rs.num_roots(); ++b) {
      if (rs.sum_index(a, b) < 0) continue;
      Rat n = g.structure_constant(a, b);
      CHECK((n == 1 || n == -1));
    }
  // [e_a1, e_a2] = +- e_theta with the extraspecial convention giving +1
  CHECK(g.structure_constant(0, 1) == 1);
}

TEST_CASE("G2 chain coefficients reach p+1 = 3") {
  RootSystem rs = RootSystem::build({{'G', 2}});
  ChevalleyAlgebra g = ChevalleyAlgebra::build(rs);
  CHECK(g.dim() == 14);
  Rat maxabs = 0;
  for (int a = 0; a < rs.num_roots(); ++a)
    for (int b = 0; b < rs.num_roots(); ++b) {
      int s = rs.sum_index(a, b);
      if (s < 0) continue;
      Rat n = abs(g.structure_constant(a, b));
      if (n > maxabs) maxabs = n;
      // |N| = p + 1 where p is the chain length down from b along a
      std::vector<int> v = rs.root(b).coords;
      int p = 0;
      for (;;) {
        for (int k = 0; k < rs.rank(); ++k) v[k] -= rs.root(a).coords[k];
        if (rs.root_index(v) < 0) break;
        ++p;
      }
      CHECK(n == p + 1);
    }
  CHECK(maxabs == 3);
}

TEST_CASE("coroot bracket [e_a, e_-a] = h_a") {
  for (const auto& tr : {TypeRank{'A', 2}, TypeRank{'B', 2}, TypeRank{'G', 2}, TypeRank{'C', 3}}) {
    RootSystem rs = RootSystem::build({tr});
    ChevalleyAlgebra g = ChevalleyAlgebra::build(rs);
    for (int a = 0; a < rs.num_roots(); ++a) {
      LieElement br = g.bracket(g.e(a), g.e(rs.negative_of(a)));
      QVec coroot = g.coroot_coords(a);
      LieElement expect = g.zero();
      for (int i = 0; i < rs.rank(); ++i)
        if (coroot[i] != 0) expect += g.h(i, coroot[i]);
      CHECK(br == expect);
      // pairing sanity: [h_a, e_a] = 2 e_a
      CHECK(g.bracket(br, g.e(a)) == g.e(a, Rat(2)));
    }
  }
}

TEST_CASE("antisymmetry and Jacobi, exhaustive for rank <= 4") {
  std::vector<TypeRank> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3},
                                 {'B', 4}, {'C', 2}, {'C', 3}, {'C', 4}, {'D', 3}, {'D', 4},
                                 {'F', 4}, {'G', 2}};
  for (const auto& tr : types) {
    CAPTURE(tr.letter);
    CAPTURE(tr.rank);
    ChevalleyAlgebra g = ChevalleyAlgebra::build(RootSystem::build({tr}));
    check_antisymmetry(g);
    check_jacobi_exhaustive(g);
  }
}

TEST_CASE("Jacobi on random triples for rank 5-8") {
  std::mt19937_64 rng(2024);
  for (const auto& tr : {TypeRank{'A', 6}, TypeRank{'B', 5}, TypeRank{'D', 6}, TypeRank{'E', 6}}) {
    CAPTURE(tr.letter);
    CAPTURE(tr.rank);
    ChevalleyAlgebra g = ChevalleyAlgebra::build(RootSystem::build({tr}));
    for (int t = 0; t < 1000; ++t) {
      int a = int(rng() % (unsigned)g.dim());
      int b = int(rng() % (unsigned)g.dim());
      int c = int(rng() % (unsigned)g.dim());
      LieElement xa = basis_elt(g, a), xb = basis_elt(g, b), xc = basis_elt(g, c);
      LieElement sum = g.bracket(xa, g.bracket(xb, xc));
      sum += g.bracket(xb, g.bracket(xc, xa));
      sum += g.bracket(xc, g.bracket(xa, xb));
      REQUIRE(sum.is_zero());
    }
  }
}

TEST_CASE("bracket bilinearity and self-annihilation") {
  ChevalleyAlgebra g = ChevalleyAlgebra::build(RootSystem::build({{'B', 2}}));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    LieElement x = random_element(g, rng), y = random_element(g, rng);
    CHECK(g.bracket(x, x).is_zero());
    LieElement sum = g.bracket(x + y, x + y);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("bracket rejects mismatched algebras") {
  ChevalleyAlgebra g1 = ChevalleyAlgebra::build(RootSystem::build({{'A', 1}}));
  ChevalleyAlgebra g2 = ChevalleyAlgebra::build(RootSystem::build({{'A', 1}}));
  CHECK_THROWS_AS(g1.bracket(g1.e(0), g2.e(0)), std::invalid_argument);
}

TEST_CASE("A2 bracket example: (e_a1 + e_a2, e_-a1) = h_a1") {
  RootSystem rs = RootSystem::build({{'A', 2}});
  ChevalleyAlgebra g = ChevalleyAlgebra::build(rs);
  LieElement x = g.e(0) + g.e(1);      // e_a1 + e_a2
  LieElement y = g.e(rs.negative_of(0));
  CHECK(g.bracket(x, y) == g.h(0));    // a2 - a1 is not a root
}

TEST_CASE("Killing form is ad-invariant") {
  ChevalleyAlgebra g = ChevalleyAlgebra::build(RootSystem::build({{'A', 2}}));
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    LieElement x = random_element(g, rng), y = random_element(g, rng), z = random_element(g, rng);
    CHECK(g.killing(g.bracket(x, y), z) == g.killing(x, g.bracket(y, z)));
  }
}

TEST_CASE("generated subalgebra") {
  RootSystem rs = RootSystem::build({{'A', 2}});
  ChevalleyAlgebra g = ChevalleyAlgebra::build(rs);

  // single nilpotent generator spans itself
  CHECK(g.generated_subalgebra({g.e(0)}).size() == 1);

  // simple root vectors of both signs generate everything
  std::vector<LieElement> gens;
  for (int i = 0; i < 2; ++i) {
    gens.push_back(g.e(rs.simple_root_index(i)));
    gens.push_back(g.e(rs.negative_of(rs.simple_root_index(i))));
  }
  CHECK(g.generated_subalgebra(gens).size() == 8);

  // monotonicity: enlarging the generator set never shrinks the span
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    std::vector<LieElement> small, large;
    for (int k = 0; k < 2; ++k) small.push_back(random_element(g, rng));
    large = small;
    large.push_back(random_element(g, rng));
    CHECK(g.generated_subalgebra(small).size() <= g.generated_subalgebra(large).size());
  }
}

TEST_CASE("centralizer dimensions") {
  RootSystem rs = RootSystem::build({{'A', 2}});
  ChevalleyAlgebra g = ChevalleyAlgebra::build(rs);

  CHECK(g.centralizer_in_g(g.zero()).size() == 8);

  // minimal nilpotent e_theta: dim z = 4
  int theta = rs.highest_root_index();
  CHECK(g.centralizer_in_g(g.e(theta)).size() == 4);

  ChevalleyAlgebra sl2 = ChevalleyAlgebra::build(RootSystem::build({{'A', 1}}));
  CHECK(sl2.centralizer_in_g(sl2.e(0)).size() == 1);
}

TEST_CASE("centralizer dimension is at least the rank") {
  std::mt19937_64 rng(31);
  for (const auto& tr : {TypeRank{'A', 2}, TypeRank{'B', 2}, TypeRank{'G', 2}}) {
    RootSystem rs = RootSystem::build({tr});
    ChevalleyAlgebra g = ChevalleyAlgebra::build(rs);
    for (int t = 0; t < 15; ++t) {
      LieElement x = random_element(g, rng);
      CHECK(int(g.centralizer_in_g(x).size()) >= rs.rank());
    }
  }
}

TEST_CASE("nilpotency and nondegeneracy predicates") {
  RootSystem rs = RootSystem::build({{'A', 1}, {'A', 1}});
  ChevalleyAlgebra g = ChevalleyAlgebra::build(rs);
  CHECK(g.is_nilpotent(g.e(0)));
  CHECK(!g.is_nilpotent(g.h(0)));
  CHECK(!g.is_nondegenerate(g.e(0)));          // lives in the first ideal only
  CHECK(g.is_nondegenerate(g.e(0) + g.e(1)));  // e_a1 + e_a2 touches both
}
