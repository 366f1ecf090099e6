#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "lieq/rootsys.hpp"

using namespace lieq;

namespace {

int classical_count(char t, int n) {
  switch (t) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case 'F': return 48;
    case 'G': return 12;
  }
  return -1;
}

std::vector<TypeRank> all_simple_upto(int max_rank) {
  std::vector<TypeRank> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({'A', n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({'B', n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({'C', n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({'D', n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({'E', n});
  if (max_rank >= 4) out.push_back({'F', 4});
  if (max_rank >= 2) out.push_back({'G', 2});
  return out;
}

}  // namespace

TEST_CASE("A1 has two roots") {
  RootSystem rs = RootSystem::build({{'A', 1}});
  CHECK(rs.num_roots() == 2);
  CHECK(rs.num_positive() == 1);
  CHECK(rs.index_of_connection() == 2);
}

TEST_CASE("G2 root count and Cartan matrix") {
  RootSystem rs = RootSystem::build({{'G', 2}});
  CHECK(rs.num_roots() == 12);
  CHECK(rs.cartan()[0][0] == 2);
  CHECK(rs.cartan()[0][1] == -1);
  CHECK(rs.cartan()[1][0] == -3);
  CHECK(rs.cartan()[1][1] == 2);
  // highest root is long: 3a1 + 2a2
  CHECK(rs.root(rs.highest_root_index()).coords == std::vector<int>{3, 2});
}

TEST_CASE("root counts match the classical tables") {
  for (const auto& tr : all_simple_upto(6)) {
    RootSystem rs = RootSystem::build({tr});
    CAPTURE(tr.letter);
    CAPTURE(tr.rank);
    CHECK(rs.num_roots() == classical_count(tr.letter, tr.rank));
  }
}

TEST_CASE("direct sum A2+A1") {
  RootSystem rs = RootSystem::build({{'A', 2}, {'A', 1}});
  CHECK(rs.rank() == 3);
  CHECK(rs.num_roots() == 8);
  CHECK(rs.index_of_connection() == 6);  // 3 * 2
  CHECK(rs.num_components() == 2);
  CHECK(rs.component_of_simple(0) == 0);
  CHECK(rs.component_of_simple(2) == 1);
  CHECK_THROWS(rs.highest_root_index());
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(RootSystem::build({{'E', 9}}), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build({{'B', 1}}), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build({{'F', 3}}), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build({{'X', 2}}), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build({}), std::invalid_argument);
}

TEST_CASE("roots are sign-homogeneous integer vectors") {
  for (const auto& tr : {TypeRank{'B', 3}, TypeRank{'G', 2}, TypeRank{'F', 4}}) {
    RootSystem rs = RootSystem::build({tr});
    for (const auto& r : rs.all_roots()) {
      bool pos = true, neg = true;
      int nonzero = 0;
      for (int c : r.coords) {
        if (c < 0) pos = false;
        if (c > 0) neg = false;
        if (c != 0) ++nonzero;
      }
      CHECK(nonzero > 0);
      CHECK((pos || neg));
    }
  }
}

TEST_CASE("reflection closure: the reflection of any root in any root is a root") {
  for (const auto& tr : {TypeRank{'A', 3}, TypeRank{'B', 2}, TypeRank{'G', 2}, TypeRank{'C', 3}}) {
    RootSystem rs = RootSystem::build({tr});
    for (int i = 0; i < rs.num_roots(); ++i)
      for (int j = 0; j < rs.num_roots(); ++j) {
        Weight wi = rs.weight_of_root(i);
        Rat pairing = rs.coroot_pairing(j, wi);
        CHECK(pairing.get_den() == 1);
        std::vector<int> refl = rs.root(i).coords;
        long p = pairing.get_num().get_si();
        for (int k = 0; k < rs.rank(); ++k) refl[k] -= int(p) * rs.root(j).coords[k];
        CHECK(rs.root_index(refl) >= 0);
      }
  }
}

TEST_CASE("inverse Cartan is exact and positive for simple types up to rank 8") {
  for (const auto& tr : all_simple_upto(8)) {
    RootSystem rs = RootSystem::build({tr});
    const int n = rs.rank();
    // C * C^-1 = I exactly
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat s = 0;
        for (int k = 0; k < n; ++k) s += Rat(rs.cartan()[i][k]) * rs.inverse_cartan()[k][j];
        CHECK(s == (i == j ? 1 : 0));
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(rs.inverse_cartan()[i][j] > 0);
  }
}

TEST_CASE("sym matrix is positive definite and realizes the Cartan matrix") {
  for (const auto& tr : all_simple_upto(4)) {
    RootSystem rs = RootSystem::build({tr});
    const int n = rs.rank();
    // leading principal minors positive (exact Gaussian elimination)
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = rs.sym()[i][j];
    for (int k = 1; k <= n; ++k) {
      QMat sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(i, j);
      CHECK(rank_of(sub) == k);
    }
    // cartan[i][j] = 2(ai,aj)/(aj,aj)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(Rat(rs.cartan()[i][j]) == 2 * rs.sym()[i][j] / rs.sym()[j][j]);
  }
}

TEST_CASE("pi-height examples in A2") {
  RootSystem rs = RootSystem::build({{'A', 2}});
  Weight theta = rs.weight_from_root_coords({Rat(1), Rat(1)});
  CHECK(rs.pi_height({0}, theta) == 1);
  CHECK(rs.pi_height({0, 1}, theta) == 2);
  // w1 = (2a1 + a2)/3
  Weight w1 = rs.fund_weights()[0];
  CHECK(w1.root_coords == QVec{Rat(2, 3), Rat(1, 3)});
  CHECK(rs.pi_height({0}, w1) == Rat(2, 3));
}

TEST_CASE("pi-height agrees with the coweight inner product form") {
  std::mt19937_64 rng(12);
  for (const auto& tr : {TypeRank{'A', 2}, TypeRank{'B', 3}, TypeRank{'G', 2}, TypeRank{'D', 4}}) {
    RootSystem rs = RootSystem::build({tr});
    const int n = rs.rank();
    for (int trial = 0; trial < 100; ++trial) {
      QVec fc(n);
      for (int i = 0; i < n; ++i) fc[i] = Rat(long(rng() % 11) - 5);
      Weight nu = rs.weight_from_fund_coords(fc);
      std::vector<int> pi;
      for (int i = 0; i < n; ++i)
        if (rng() % 2) pi.push_back(i);
      // sum of w_a^vee = 2 w_a/(a,a) paired with nu
      Rat ip = 0;
      for (int i : pi) ip += 2 * rs.inner(rs.fund_weights()[i], nu) / rs.sym()[i][i];
      CHECK(rs.pi_height(pi, nu) == ip);
    }
  }
}

TEST_CASE("f times fundamental weight root coordinates is integral") {
  for (const auto& tr : all_simple_upto(8)) {
    RootSystem rs = RootSystem::build({tr});
    for (const auto& w : rs.fund_weights())
      for (const auto& c : w.root_coords) {
        Rat scaled = Rat(rs.index_of_connection()) * c;
        CHECK(scaled.get_den() == 1);
      }
  }
}

TEST_CASE("dynkin bipartition") {
  RootSystem a3 = RootSystem::build({{'A', 3}});
  auto [p1, p2] = a3.dynkin_bipartition();
  CHECK(p1 == std::vector<int>{0, 2});
  CHECK(p2 == std::vector<int>{1});

  RootSystem a1 = RootSystem::build({{'A', 1}});
  auto [q1, q2] = a1.dynkin_bipartition();
  CHECK(q1 == std::vector<int>{0});
  CHECK(q2.empty());

  RootSystem d4 = RootSystem::build({{'D', 4}});
  auto [r1, r2] = d4.dynkin_bipartition();
  CHECK(r1 == std::vector<int>{0, 2, 3});
  CHECK(r2 == std::vector<int>{1});

  // both parts consist of pairwise orthogonal roots, for every type
  for (const auto& tr : all_simple_upto(6)) {
    RootSystem rs = RootSystem::build({tr});
    auto [s1, s2] = rs.dynkin_bipartition();
    for (const auto& part : {s1, s2})
      for (int a : part)
        for (int b : part)
          if (a != b) CHECK(rs.cartan()[a][b] == 0);
  }
}

TEST_CASE("dominant representative") {
  RootSystem rs = RootSystem::build({{'B', 2}});
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    QVec fc = {Rat(long(rng() % 9) - 4), Rat(long(rng() % 9) - 4)};
    Weight w = rs.weight_from_fund_coords(fc);
    Weight d = rs.dominant_representative(w);
    CHECK(d.is_dominant());
    CHECK(rs.inner(w, w) == rs.inner(d, d));
  }
}

TEST_CASE("type string parsing") {
  auto t = RootSystem::parse_type("A2+A1");
  REQUIRE(t.size() == 2);
  CHECK(t[0].letter == 'A');
  CHECK(t[0].rank == 2);
  CHECK(t[1].rank == 1);
  CHECK_THROWS(RootSystem::parse_type("A"));
  CHECK_THROWS(RootSystem::parse_type(""));
}
