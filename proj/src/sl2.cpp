#include "lieq/sl2.hpp"

#include <cassert>
#include <stdexcept>

#include "lieq/factor.hpp"
#include "lieq/poly.hpp"

namespace lieq {

int GradedSubspace::total_dim() const {
  int d = 0;
  for (const auto& [deg, basis] : pieces) d += int(basis.size());
  return d;
}

int GradedSubspace::dim_at(const Rat& degree) const {
  auto it = pieces.find(degree);
  return it == pieces.end() ? 0 : int(it->second.size());
}

namespace {

// rational eigenvalues of a matrix acting split-semisimply; throws otherwise
std::vector<Rat> split_spectrum(const QMat& m, const char* what) {
  QPoly mp = min_poly_of_matrix(m);
  std::vector<Rat> eigen;
  for (const auto& [fac, mult] : factor_rational(mp)) {
    if (fac.degree() != 1)
      throw std::invalid_argument(std::string(what) + ": not split-semisimple (irreducible factor of degree " +
                                  std::to_string(fac.degree()) + ")");
    if (mult != 1)
      throw std::invalid_argument(std::string(what) + ": not semisimple (repeated eigenvalue)");
    eigen.push_back(-fac.c[0]);  // x + c0 -> root -c0
  }
  return eigen;
}

}  // namespace

Sl2Triple jacobson_morozov(const ChevalleyAlgebra& g, const LieElement& e) {
  if (e.is_zero()) throw std::invalid_argument("jacobson_morozov: e = 0");
  if (!g.is_nilpotent(e)) throw std::invalid_argument("jacobson_morozov: e is not nilpotent");

  QMat ade = g.ad_matrix(e);
  QMat ade2 = ade * ade;
  QVec target = e.dense();
  for (auto& x : target) x *= -2;
  auto y = solve(ade2, target);
  if (!y) throw std::logic_error("jacobson_morozov: (ad e)^2 y = -2e unsolvable");
  LieElement h = g.element(ade.apply(*y));

  // sanity: [h, e] = 2e
  assert(g.bracket(h, e) == e.scaled(Rat(2)));

  auto f0 = solve(ade, h.dense());
  if (!f0) throw std::logic_error("jacobson_morozov: ad e(f) = h unsolvable");

  // project f0 onto the (-2)-eigenspace of ad h (Lagrange projector)
  QMat adh = g.ad_matrix(h);
  std::vector<Rat> eigen = split_spectrum(adh, "jacobson_morozov: ad h");
  QVec f = *f0;
  for (const Rat& lam : eigen) {
    if (lam == -2) continue;
    // f <- (ad h - lam) f / (-2 - lam)
    QVec img = adh.apply(f);
    Rat denom = Rat(-2) - lam;
    for (size_t i = 0; i < f.size(); ++i) f[i] = (img[i] - lam * f[i]) / denom;
  }
  Sl2Triple t{e, h, g.element(f)};
  assert(g.bracket(t.h, t.f) == t.f.scaled(Rat(-2)));
  assert(g.bracket(t.e, t.f) == t.h);
  return t;
}

Sl2Triple principal_triple(const ChevalleyAlgebra& g) {
  const RootSystem& rs = g.roots();
  const int n = rs.rank();
  // solve sum_j cartan[i][j] c_j = 2 for all i
  QMat c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.at(i, j) = rs.cartan()[i][j];
  auto coef = solve(c, QVec(n, Rat(2)));
  assert(coef);

  LieElement e = g.zero(), h = g.zero(), f = g.zero();
  for (int i = 0; i < n; ++i) {
    int idx = rs.simple_root_index(i);
    e += g.e(idx);
    h += g.h(i, (*coef)[i]);
    f += g.e(rs.negative_of(idx), (*coef)[i]);
  }
  Sl2Triple t{e, h, f};
  assert(g.bracket(t.h, t.e) == t.e.scaled(Rat(2)));
  assert(g.bracket(t.e, t.f) == t.h);
  return t;
}

LieElement minimal_nilpotent(const ChevalleyAlgebra& g) {
  return g.e(g.roots().highest_root_index());
}

std::map<Rat, int> ad_eigen_dims(const ChevalleyAlgebra& g, const LieElement& h) {
  QMat adh = g.ad_matrix(h);
  std::map<Rat, int> dims;
  int total = 0;
  for (const Rat& lam : split_spectrum(adh, "ad_eigen_dims")) {
    QMat shifted = adh;
    for (int i = 0; i < adh.rows(); ++i) shifted.at(i, i) -= lam;
    int d = shifted.cols() - rank_of(shifted);
    dims[lam] = d;
    total += d;
  }
  assert(total == g.dim());
  return dims;
}

GradedSubspace grade_by_ad(const ChevalleyAlgebra& g, const LieElement& h,
                           const std::vector<LieElement>& space) {
  GradedSubspace out;
  if (space.empty()) return out;
  const int k = int(space.size());
  // matrix of ad h restricted to the span (must be stable)
  RowSpan span(g.dim(), /*track=*/true);
  for (const auto& v : space) {
    auto r = span.insert(v.dense());
    if (!r.added) throw std::invalid_argument("grade_by_ad: input not independent");
  }
  QMat restricted(k, k);
  for (int j = 0; j < k; ++j) {
    auto coords = span.coords_of(g.bracket(h, space[j]).dense());
    if (!coords) throw std::invalid_argument("grade_by_ad: span not ad h stable");
    coords->resize(k, Rat(0));
    for (int i = 0; i < k; ++i) restricted.at(i, j) = (*coords)[i];
  }
  for (const Rat& lam : split_spectrum(restricted, "grade_by_ad")) {
    QMat shifted = restricted;
    for (int i = 0; i < k; ++i) shifted.at(i, i) -= lam;
    QMat ker = kernel_basis(shifted);
    std::vector<LieElement> piece;
    for (int r = 0; r < ker.rows(); ++r) {
      LieElement x = g.zero();
      for (int j = 0; j < k; ++j)
        if (ker.at(r, j) != 0) x += space[j].scaled(ker.at(r, j));
      piece.push_back(x);
    }
    if (!piece.empty()) out.pieces[lam] = std::move(piece);
  }
  assert(out.total_dim() == k);
  return out;
}

GradedSubspace centralizer_nilradical(const ChevalleyAlgebra& g, const Sl2Triple& t) {
  GradedSubspace all = grade_by_ad(g, t.h, g.centralizer_in_g(t.e));
  GradedSubspace out;
  for (auto& [deg, basis] : all.pieces)
    if (deg >= 1) out.pieces[deg] = std::move(basis);
  return out;
}

std::pair<LieElement, LieElement> two_dim_wide_pair(const ChevalleyAlgebra& g) {
  if (!g.roots().is_simple() || g.rank() < 2)
    throw std::invalid_argument("two_dim_wide_pair: needs a simple algebra of rank >= 2");
  Sl2Triple t = principal_triple(g);
  GradedSubspace graded = grade_by_ad(g, t.h, g.centralizer_in_g(t.e));
  for (const auto& [deg, basis] : graded.pieces) {
    for (const auto& cand : basis) {
      std::vector<LieElement> gens = {t.e, t.h, t.f, cand};
      if (int(g.generated_subalgebra(gens).size()) == g.dim()) {
        assert(g.bracket(t.e, cand).is_zero());
        return {t.e, cand};
      }
    }
  }
  throw std::runtime_error("two_dim_wide_pair: no h-eigenvector of z(e) generates g");
}

}  // namespace lieq
