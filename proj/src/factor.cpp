#include "lieq/factor.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lieq {

namespace {

// ---------------------------------------------------------------------------
// Integer polynomials (ascending coefficients)

using ZPoly = std::vector<Int>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return int(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// division by a monic divisor over Z; returns {quotient, remainder}
std::pair<ZPoly, ZPoly> zdivrem_monic(ZPoly a, const ZPoly& b) {
  assert(!b.empty() && b.back() == 1);
  if (zdeg(a) < zdeg(b)) return {{}, a};
  ZPoly q(a.size() - b.size() + 1, Int(0));
  for (int k = zdeg(a) - zdeg(b); k >= 0; --k) {
    Int f = a[k + zdeg(b)];
    if (f == 0) continue;
    q[k] = f;
    for (size_t i = 0; i < b.size(); ++i) a[k + i] -= f * b[i];
  }
  ztrim(a);
  return {q, a};
}

ZPoly zmod(const ZPoly& a, const Int& m) {
  ZPoly r = a;
  for (auto& x : r) {
    x %= m;
    if (x < 0) x += m;
  }
  ztrim(r);
  return r;
}

ZPoly zsymmetric(const ZPoly& a, const Int& m) {
  ZPoly r = zmod(a, m);
  Int half = m / 2;
  for (auto& x : r)
    if (x > half) x -= m;
  ztrim(r);
  return r;
}

// ---------------------------------------------------------------------------
// Polynomials over F_p, p an odd machine prime

struct PPoly {
  std::vector<long> c;  // in [0, p)
};

long pinv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return t < 0 ? t + p : t;
}

void ptrim(PPoly& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

int pdeg(const PPoly& a) { return int(a.c.size()) - 1; }

PPoly pmul(const PPoly& a, const PPoly& b, long p) {
  if (a.c.empty() || b.c.empty()) return {};
  PPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % p;
  }
  ptrim(r);
  return r;
}

PPoly psub(const PPoly& a, const PPoly& b, long p) {
  PPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] - b.c[i] % p + p) % p;
  ptrim(r);
  return r;
}

PPoly pmonic(const PPoly& a, long p) {
  if (a.c.empty()) return a;
  long inv = pinv(a.c.back(), p);
  PPoly r = a;
  for (auto& x : r.c) x = x * inv % p;
  return r;
}

std::pair<PPoly, PPoly> pdivrem(PPoly a, const PPoly& b, long p) {
  assert(!b.c.empty());
  if (pdeg(a) < pdeg(b)) return {{}, a};
  long lcinv = pinv(b.c.back(), p);
  PPoly q;
  q.c.assign(a.c.size() - b.c.size() + 1, 0);
  for (int k = pdeg(a) - pdeg(b); k >= 0; --k) {
    long f = a.c[k + pdeg(b)] * lcinv % p;
    if (f == 0) continue;
    q.c[k] = f;
    for (size_t i = 0; i < b.c.size(); ++i)
      a.c[k + i] = (a.c[k + i] - f * b.c[i] % p + p) % p;
  }
  ptrim(a);
  ptrim(q);
  return {q, a};
}

PPoly pgcd(PPoly a, PPoly b, long p) {
  while (!b.c.empty()) {
    PPoly r = pdivrem(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a, p);
}

PPoly pderiv(const PPoly& a, long p) {
  PPoly r;
  if (pdeg(a) <= 0) return r;
  r.c.assign(a.c.size() - 1, 0);
  for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = long(i) % p * a.c[i] % p;
  ptrim(r);
  return r;
}

PPoly ppowmod(PPoly base, Int exp, const PPoly& mod, long p) {
  PPoly result;
  result.c = {1};
  base = pdivrem(base, mod, p).second;
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) result = pdivrem(pmul(result, base, p), mod, p).second;
    base = pdivrem(pmul(base, base, p), mod, p).second;
    exp >>= 1;
  }
  return result;
}

// deterministic PRNG for equal-degree splitting
struct Lcg {
  unsigned long long s = 0x9E3779B97F4A7C15ull;
  long next(long p) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return long((s >> 17) % (unsigned long long)p);
  }
};

void equal_degree_split(const PPoly& f, int d, long p, Lcg& rng, std::vector<PPoly>& out) {
  if (pdeg(f) == d) {
    out.push_back(f);
    return;
  }
  Int pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  Int exp = (pd - 1) / 2;
  for (;;) {
    PPoly r;
    r.c.assign(pdeg(f), 0);
    for (auto& x : r.c) x = rng.next(p);
    ptrim(r);
    if (r.c.empty()) continue;
    PPoly s = ppowmod(r, exp, f, p);
    s.c.resize(std::max<size_t>(s.c.size(), 1), 0);
    s.c[0] = (s.c[0] + p - 1) % p;  // s - 1
    ptrim(s);
    PPoly g = pgcd(s, f, p);
    if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(pdivrem(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

// Cantor-Zassenhaus; f monic squarefree mod p
std::vector<PPoly> factor_mod_p(PPoly f, long p) {
  std::vector<PPoly> out;
  Lcg rng;
  PPoly x;
  x.c = {0, 1};
  PPoly h = x;
  int d = 0;
  while (2 * (d + 1) <= pdeg(f)) {
    ++d;
    h = ppowmod(h, Int(p), f, p);
    PPoly g = pgcd(psub(h, x, p), f, p);
    if (pdeg(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      f = pdivrem(f, g, p).first;
      h = pdivrem(h, f, p).second;
    }
  }
  if (pdeg(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end(),
            [](const PPoly& a, const PPoly& b) { return a.c.size() != b.c.size() ? a.c.size() < b.c.size() : a.c < b.c; });
  return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting (linear, all factors at once; everything monic)

std::vector<long> small_primes() {
  static std::vector<long> primes = [] {
    std::vector<long> ps;
    const int N = 20000;
    std::vector<bool> sieve(N, true);
    for (int i = 2; i < N; ++i)
      if (sieve[i]) {
        ps.push_back(i);
        for (int j = 2 * i; j < N; j += i) sieve[j] = false;
      }
    return ps;
  }();
  return primes;
}

PPoly to_ppoly(const ZPoly& a, long p) {
  PPoly r;
  r.c.reserve(a.size());
  for (const auto& x : a) {
    Int m = x % p;
    if (m < 0) m += p;
    r.c.push_back(m.get_si());
  }
  ptrim(r);
  return r;
}

ZPoly to_zpoly(const PPoly& a) {
  ZPoly r;
  r.reserve(a.c.size());
  for (long x : a.c) r.push_back(Int(x));
  return r;
}

// Lift the mod-p factorization of monic squarefree F to mod p^K.
std::vector<ZPoly> hensel_lift(const ZPoly& F, const std::vector<PPoly>& factors, long p, int K) {
  const int r = int(factors.size());
  // Bezout data mod p: sigma_i * prod_{j!=i} g_j == 1 (mod g_i)
  std::vector<PPoly> sigma(r);
  for (int i = 0; i < r; ++i) {
    PPoly h;
    h.c = {1};
    for (int j = 0; j < r; ++j)
      if (j != i) h = pdivrem(pmul(h, factors[j], p), factors[i], p).second;
    // invert h mod g_i via extended Euclid in F_p[x]
    PPoly r0 = factors[i], r1 = h;
    PPoly t0, t1;
    t1.c = {1};
    while (!r1.c.empty()) {
      auto [q, r2] = pdivrem(r0, r1, p);
      PPoly t2 = psub(t0, pmul(q, t1, p), p);
      r0 = std::move(r1);
      r1 = std::move(r2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    assert(pdeg(r0) == 0);
    long inv = pinv(r0.c[0], p);
    for (auto& x : t0.c) x = x * inv % p;
    sigma[i] = t0;
  }

  std::vector<ZPoly> lifted;
  lifted.reserve(r);
  for (const auto& g : factors) lifted.push_back(to_zpoly(g));

  Int modulus = p;
  for (int k = 1; k < K; ++k) {
    // E = (F - prod lifted) / p^k  (mod p)
    ZPoly prod = {Int(1)};
    for (const auto& g : lifted) prod = zmul(prod, g);
    ZPoly e(std::max(F.size(), prod.size()), Int(0));
    for (size_t i = 0; i < F.size(); ++i) e[i] += F[i];
    for (size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
    ztrim(e);
    for (auto& x : e) {
      assert(x % modulus == 0);
      x /= modulus;
    }
    PPoly E = to_ppoly(e, p);
    if (!E.c.empty()) {
      for (int i = 0; i < r; ++i) {
        PPoly gi = to_ppoly(lifted[i], p);
        PPoly delta = pdivrem(pmul(E, sigma[i], p), gi, p).second;
        for (size_t j = 0; j < delta.c.size(); ++j) lifted[i][j] += modulus * delta.c[j];
      }
    }
    modulus *= p;
  }
  return lifted;
}

// ---------------------------------------------------------------------------
// Zassenhaus on a monic squarefree integer polynomial

std::vector<ZPoly> factor_z_squarefree(ZPoly F) {
  std::vector<ZPoly> out;
  if (zdeg(F) <= 1) {
    out.push_back(F);
    return out;
  }

  long p = 0;
  for (long cand : small_primes()) {
    if (cand == 2) continue;
    PPoly fp = to_ppoly(F, cand);
    if (pdeg(fp) != zdeg(F)) continue;  // cannot happen (monic), kept for safety
    if (pdeg(pgcd(fp, pderiv(fp, cand), cand)) == 0) {
      p = cand;
      break;
    }
  }
  if (p == 0) throw std::runtime_error("factor: no usable prime found");

  std::vector<PPoly> mod_factors = factor_mod_p(pmonic(to_ppoly(F, p), p), p);
  if (mod_factors.size() == 1) {
    out.push_back(F);
    return out;
  }

  // coefficient bound for monic factors: 2^n * ||F||_1
  Int bound = 1;
  for (const auto& c : F) bound += abs(c);
  for (int i = 0; i < zdeg(F); ++i) bound *= 2;
  Int target = 2 * bound + 1;
  int K = 1;
  Int pk = p;
  while (pk < target) {
    pk *= p;
    ++K;
  }

  std::vector<ZPoly> lifted = hensel_lift(F, mod_factors, p, K);
  Int modulus = 1;
  for (int i = 0; i < K; ++i) modulus *= p;

  // subset recombination
  std::vector<int> alive(lifted.size());
  for (size_t i = 0; i < alive.size(); ++i) alive[i] = int(i);

  auto try_subset = [&](const std::vector<int>& idx) -> bool {
    ZPoly cand = {Int(1)};
    for (int i : idx) cand = zmul(cand, lifted[i]);
    cand = zsymmetric(cand, modulus);
    if (cand.empty() || cand.back() != 1) return false;
    auto [q, rem] = zdivrem_monic(F, cand);
    if (!rem.empty()) return false;
    out.push_back(cand);
    F = q;
    std::vector<int> rest;
    for (int i : alive)
      if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(i);
    alive = rest;
    return true;
  };

  bool progress = true;
  while (progress && !alive.empty()) {
    progress = false;
    for (size_t s = 1; s <= alive.size() / 2 && !progress; ++s) {
      std::vector<int> pick(s);
      std::vector<size_t> pos(s);
      for (size_t i = 0; i < s; ++i) pos[i] = i;
      for (;;) {
        for (size_t i = 0; i < s; ++i) pick[i] = alive[pos[i]];
        if (try_subset(pick)) {
          progress = true;
          break;
        }
        // next combination
        int i = int(s) - 1;
        while (i >= 0 && pos[i] == alive.size() - s + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (size_t j = i + 1; j < s; ++j) pos[j] = pos[j - 1] + 1;
      }
    }
  }
  if (zdeg(F) > 0) out.push_back(F);
  return out;
}

QPoly zpoly_to_qpoly(const ZPoly& a) {
  QVec v;
  v.reserve(a.size());
  for (const auto& x : a) v.push_back(Rat(x));
  return QPoly(std::move(v));
}

// factor a monic squarefree rational polynomial
std::vector<QPoly> factor_squarefree(const QPoly& q) {
  std::vector<QPoly> out;
  if (q.degree() <= 1) {
    out.push_back(q);
    return out;
  }
  // clear denominators with y = D x: F(y) = D^n q(y/D) is monic integral
  Int D = 1;
  for (const auto& x : q.c) {
    Int den = x.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), D.get_mpz_t(), den.get_mpz_t());
    D = D / g * den;
  }
  const int n = q.degree();
  ZPoly F(n + 1);
  Int Dpow = 1;
  for (int k = n; k >= 0; --k) {
    Rat coeff = q.c[k] * Rat(Dpow);
    assert(coeff.get_den() == 1);
    F[k] = coeff.get_num();
    Dpow *= D;
  }
  for (const ZPoly& g : factor_z_squarefree(F)) {
    // back-substitute: g_Q(x) = g(D x) / D^deg
    QVec v(g.size());
    Rat Dp = 1;
    for (size_t i = 0; i < g.size(); ++i) {
      v[i] = Rat(g[i]) * Dp;
      Dp *= Rat(D);
    }
    QPoly gq(std::move(v));
    out.push_back(monic(gq));
  }
  return out;
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

}  // namespace

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f_in) {
  assert(!f_in.is_zero());
  QPoly f = monic(f_in);
  std::vector<std::pair<QPoly, int>> out;
  if (f.degree() < 1) return out;
  QPoly a = poly_gcd(f, derivative(f));
  QPoly b = divrem(f, a).first;
  QPoly c = divrem(derivative(f), a).first;
  QPoly d = c - derivative(b);
  int i = 1;
  while (b.degree() > 0) {
    QPoly ai = poly_gcd(b, d);
    if (ai.degree() > 0) out.emplace_back(ai, i);
    b = divrem(b, ai).first;
    c = divrem(d, ai).first;
    d = c - derivative(b);
    ++i;
  }
  return out;
}

std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  if (f.degree() < 1) return out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const QPoly& irr : factor_squarefree(part)) out.emplace_back(irr, mult);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

}  // namespace lieq
