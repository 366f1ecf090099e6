#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lieq/factor.hpp"
#include "lieq/linalg.hpp"
#include "lieq/poly.hpp"

using namespace lieq;

namespace {

QMat random_matrix(int n, std::mt19937_64& rng, int bound = 5) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rat(long(rng() % (2 * bound + 1)) - bound);
  return m;
}

}  // namespace

TEST_CASE("rref and kernel") {
  QMat m = QMat::from_rows({{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(1), Rat(0), Rat(1)}});
  QMat k = kernel_basis(m);
  CHECK(k.rows() == 1);
  // every kernel row really solves
  for (int r = 0; r < k.rows(); ++r) CHECK(is_zero_vec(m.apply(k.row(r))));
  CHECK(rank_of(m) == 2);
}

TEST_CASE("kernel rank-nullity on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    int n = 3 + int(rng() % 4);
    QMat m = random_matrix(n, rng);
    QMat k = kernel_basis(m);
    CHECK(rank_of(m) + k.rows() == n);
    for (int r = 0; r < k.rows(); ++r) CHECK(is_zero_vec(m.apply(k.row(r))));
  }
}

TEST_CASE("solve") {
  QMat a = QMat::from_rows({{Rat(2), Rat(1)}, {Rat(1), Rat(3)}});
  auto x = solve(a, {Rat(5), Rat(10)});
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == QVec{Rat(5), Rat(10)});
  // inconsistent system
  QMat b = QMat::from_rows({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}});
  CHECK(!solve(b, {Rat(1), Rat(3)}).has_value());
}

TEST_CASE("joint kernel") {
  QMat m1(1, 3), m2(1, 3);
  m1.at(0, 0) = 1;  // x = 0
  m2.at(0, 1) = 1;  // y = 0
  QMat k = joint_kernel({m1, m2}, 3);
  CHECK(k.rows() == 1);
  CHECK(k.at(0, 2) == 1);
}

TEST_CASE("RowSpan tracking expresses dependent vectors") {
  RowSpan span(3, true);
  CHECK(span.insert({Rat(1), Rat(1), Rat(0)}).added);
  CHECK(span.insert({Rat(0), Rat(1), Rat(1)}).added);
  auto res = span.insert({Rat(2), Rat(5), Rat(3)});
  CHECK(!res.added);
  REQUIRE(res.coords.size() == 2);
  CHECK(res.coords[0] == 2);
  CHECK(res.coords[1] == 3);
}

TEST_CASE("minimal polynomial of a nilpotent Jordan block") {
  QMat m(3, 3);
  m.at(0, 1) = 1;
  m.at(1, 2) = 1;
  QPoly p = min_poly_of_matrix(m);
  CHECK(p.degree() == 3);
  CHECK(p.c == QVec{Rat(0), Rat(0), Rat(0), Rat(1)});
}

TEST_CASE("minimal polynomial of a projection") {
  QMat m(4, 4);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  QPoly p = min_poly_of_matrix(m);  // x^2 - x
  CHECK(p.c == QVec{Rat(0), Rat(-1), Rat(1)});
}

TEST_CASE("polynomial division and gcd") {
  QPoly a = poly_from({-1, 0, 1});        // x^2 - 1
  QPoly b = poly_from({1, 1});            // x + 1
  auto [q, r] = divrem(a, b);
  CHECK(r.is_zero());
  CHECK(q.c == QVec{Rat(-1), Rat(1)});
  CHECK(poly_gcd(a, b).c == QVec{Rat(1), Rat(1)});
  ExtGcd eg = poly_ext_gcd(poly_from({-2, 0, 1}), poly_from({-3, 0, 1}));
  CHECK(eg.g.degree() == 0);
  QPoly lhs = eg.s * poly_from({-2, 0, 1}) + eg.t * poly_from({-3, 0, 1});
  CHECK(lhs == eg.g);
}

TEST_CASE("squarefree decomposition") {
  // (x-1)^2 (x+2)
  QPoly f = poly_from({1, -1});
  f = f * poly_from({1, -1}) * poly_from({2, 1});
  f = monic(f);
  auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].second == 1);
  CHECK(parts[0].first.c == QVec{Rat(2), Rat(1)});
  CHECK(parts[1].second == 2);
  CHECK(parts[1].first.c == QVec{Rat(-1), Rat(1)});
}

TEST_CASE("factorization oracles") {
  // (x^2-2)(x^2-3): both irreducible over Q
  QPoly f = poly_from({-2, 0, 1}) * poly_from({-3, 0, 1});
  auto facs = factor_rational(f);
  REQUIRE(facs.size() == 2);
  CHECK(facs[0].first.c == QVec{Rat(-3), Rat(0), Rat(1)});
  CHECK(facs[1].first.c == QVec{Rat(-2), Rat(0), Rat(1)});

  // x^4 + 1 is irreducible over Q though reducible mod every prime
  auto f2 = factor_rational(poly_from({1, 0, 0, 0, 1}));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].first.degree() == 4);

  // x(x-1)(x+2)^2
  QPoly f3 = poly_from({0, 1}) * poly_from({-1, 1}) * poly_from({2, 1}) * poly_from({2, 1});
  auto facs3 = factor_rational(f3);
  REQUIRE(facs3.size() == 3);
  int linear = 0;
  for (const auto& [p, mult] : facs3) {
    CHECK(p.degree() == 1);
    linear += mult;
  }
  CHECK(linear == 4);

  // cyclotomic phi_12 = x^4 - x^2 + 1
  auto f4 = factor_rational(poly_from({1, 0, -1, 0, 1}));
  REQUIRE(f4.size() == 1);

  // rational coefficients: (x - 1/2)(x + 3)
  QPoly f5 = QPoly({Rat(-1, 2), Rat(1)}) * poly_from({3, 1});
  auto facs5 = factor_rational(f5);
  REQUIRE(facs5.size() == 2);
  CHECK(facs5[0].first.c == QVec{Rat(-1, 2), Rat(1)});
  CHECK(facs5[1].first.c == QVec{Rat(3), Rat(1)});
}

TEST_CASE("factorization round trip on random products") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 10; ++t) {
    // product of random monic quadratics/linears
    QPoly f = poly_from({1});
    int parts = 2 + int(rng() % 2);
    for (int p = 0; p < parts; ++p) {
      int deg = 1 + int(rng() % 2);
      QVec c(deg + 1, Rat(1));
      for (int i = 0; i < deg; ++i) c[i] = Rat(long(rng() % 9) - 4);
      f = f * QPoly(std::move(c));
    }
    QPoly back = poly_from({1});
    for (const auto& [p, mult] : factor_rational(f))
      for (int e = 0; e < mult; ++e) back = back * p;
    CHECK(back == monic(f));
  }
}
