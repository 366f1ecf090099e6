#include "lieq/poly.hpp"

#include <cassert>

namespace lieq {

void QPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat QPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (int i = degree(); i >= 0; --i) r = r * x + c[i];
  return r;
}

QPoly poly_from(std::initializer_list<long> coeffs) {
  QVec v;
  for (long x : coeffs) v.push_back(Rat(x));
  return QPoly(std::move(v));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  QVec r(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  QVec r(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  QVec r(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      if (b.c[j] != 0) r[i + j] += a.c[i] * b.c[j];
  }
  return QPoly(std::move(r));
}

QPoly scale(const QPoly& a, const Rat& s) {
  QVec r = a.c;
  for (auto& x : r) x *= s;
  return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
  assert(!b.is_zero());
  QPoly r = a;
  if (a.degree() < b.degree()) return {QPoly(), r};
  QVec q(a.degree() - b.degree() + 1, Rat(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rat f = r.lc() / b.lc();
    q[k] = f;
    for (int i = 0; i <= b.degree(); ++i) r.c[i + k] -= f * b.c[i];
    r.trim();
  }
  return {QPoly(std::move(q)), r};
}

QPoly monic(const QPoly& a) {
  if (a.is_zero()) return a;
  return scale(a, 1 / a.lc());
}

QPoly poly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

QPoly derivative(const QPoly& a) {
  if (a.degree() <= 0) return QPoly();
  QVec r(a.degree());
  for (int i = 1; i <= a.degree(); ++i) r[i - 1] = Rat(i) * a.c[i];
  return QPoly(std::move(r));
}

ExtGcd poly_ext_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = poly_from({1}), s1;
  QPoly t0, t1 = poly_from({1});
  while (!r1.is_zero()) {
    auto [q, r2] = divrem(r0, r1);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat inv = 1 / r0.lc();
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

QMat eval_poly(const QPoly& p, const QMat& m) {
  assert(m.rows() == m.cols());
  QMat r(m.rows(), m.cols());
  for (int i = p.degree(); i >= 0; --i) {
    r = r * m;
    if (p.c[i] != 0)
      for (int d = 0; d < m.rows(); ++d) r.at(d, d) += p.c[i];
  }
  return r;
}

QPoly min_poly_of_matrix(const QMat& m) {
  assert(m.rows() == m.cols());
  const int n = m.rows();
  RowSpan span(n * n, /*track=*/true);
  QMat power = QMat::identity(n);
  for (int k = 0;; ++k) {
    auto res = span.insert(power.flatten());
    if (!res.added) {
      // power^k = sum coords_j power^j  =>  x^k - sum coords_j x^j
      QVec c(k + 1, Rat(0));
      for (int j = 0; j < k; ++j) c[j] = -res.coords[j];
      c[k] = 1;
      return QPoly(std::move(c));
    }
    power = power * m;
    assert(k <= n);  // Cayley-Hamilton guarantees termination
  }
}

}  // namespace lieq
