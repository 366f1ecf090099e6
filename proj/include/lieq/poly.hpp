#pragma once

#include <vector>

#include "lieq/linalg.hpp"
#include "lieq/rational.hpp"

namespace lieq {

/// Univariate polynomial over Q, coefficients in ascending degree order.
struct QPoly {
  QVec c;

  QPoly() = default;
  explicit QPoly(QVec coeffs) : c(std::move(coeffs)) { trim(); }

  int degree() const { return int(c.size()) - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c.empty(); }
  const Rat& lc() const { return c.back(); }
  void trim();

  Rat eval(const Rat& x) const;
  bool operator==(const QPoly& o) const { return c == o.c; }
};

QPoly poly_from(std::initializer_list<long> coeffs);

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rat& s);

/// Quotient and remainder; b must be nonzero.
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);

QPoly monic(const QPoly& a);
QPoly poly_gcd(QPoly a, QPoly b);  // monic gcd
QPoly derivative(const QPoly& a);

/// Extended Euclid: g = gcd (monic), with s*a + t*b = g.
struct ExtGcd {
  QPoly g, s, t;
};
ExtGcd poly_ext_gcd(const QPoly& a, const QPoly& b);

/// Evaluate p at a square matrix.
QMat eval_poly(const QPoly& p, const QMat& m);

/// Minimal polynomial of a square matrix (monic), by Krylov iteration on the
/// flattened powers.
QPoly min_poly_of_matrix(const QMat& m);

}  // namespace lieq
