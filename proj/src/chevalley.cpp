#include "lieq/chevalley.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

namespace lieq {

QVec LieElement::dense() const {
  assert(alg);
  QVec v(size_t(alg ? alg->dim() : 0), Rat(0));
  for (const auto& [i, c] : terms) v[i] = c;
  return v;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  assert(alg == o.alg);
  std::vector<std::pair<int, Rat>> merged;
  size_t i = 0, j = 0;
  while (i < terms.size() || j < o.terms.size()) {
    if (j == o.terms.size() || (i < terms.size() && terms[i].first < o.terms[j].first)) {
      merged.push_back(terms[i++]);
    } else if (i == terms.size() || o.terms[j].first < terms[i].first) {
      merged.push_back(o.terms[j++]);
    } else {
      Rat c = terms[i].second + o.terms[j].second;
      if (c != 0) merged.emplace_back(terms[i].first, c);
      ++i;
      ++j;
    }
  }
  terms = std::move(merged);
  return *this;
}

LieElement LieElement::operator+(const LieElement& o) const {
  LieElement r = *this;
  r += o;
  return r;
}

LieElement LieElement::operator-() const { return scaled(Rat(-1)); }

LieElement LieElement::scaled(const Rat& c) const {
  if (c == 0) return LieElement{alg, {}};
  LieElement r{alg, terms};
  for (auto& [i, x] : r.terms) x *= c;
  return r;
}

bool LieElement::operator==(const LieElement& o) const {
  return alg == o.alg && terms == o.terms;
}

namespace {

/// Computes all structure constants N(a,b) by Carter's recursion: +(p+1) on
/// extraspecial pairs, the Jacobi quadruple relation for the remaining
/// special pairs, and the invariant-form rules for mixed-sign pairs.
class SignTable {
 public:
  explicit SignTable(const RootSystem& rs) : rs_(rs) {
    const int nr = rs.num_roots();
    norm2_.resize(nr);
    for (int i = 0; i < nr; ++i) {
      Weight w = rs.weight_of_root(i);
      norm2_[i] = rs.inner(w, w);
    }
    // extraspecial pair of each non-simple positive root: the decomposition
    // with the smallest first part in the (height, lex) order
    expair_.assign(rs.num_positive(), {-1, -1});
    for (int s = 0; s < rs.num_positive(); ++s) {
      if (rs.root(s).height() == 1) continue;
      for (int a = 0; a < rs.num_positive(); ++a) {
        std::vector<int> diff(rs.rank());
        for (int k = 0; k < rs.rank(); ++k)
          diff[k] = rs.root(s).coords[k] - rs.root(a).coords[k];
        int b = rs.root_index(diff);
        if (b >= 0 && b < rs.num_positive()) {
          expair_[s] = {a, b};
          break;
        }
      }
      assert(expair_[s].first >= 0);
    }
  }

  // max k with b - k*a a root
  int chain_p(int a, int b) const {
    int p = 0;
    std::vector<int> v = rs_.root(b).coords;
    for (;;) {
      for (int k = 0; k < rs_.rank(); ++k) v[k] -= rs_.root(a).coords[k];
      if (rs_.root_index(v) < 0) break;
      ++p;
    }
    return p;
  }

  Rat N(int a, int b) {
    int s = rs_.sum_index(a, b);
    if (s < 0) return Rat(0);
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Rat val = compute(a, b, s);
    assert(val != 0);
    memo_[key] = val;
    return val;
  }

 private:
  bool positive(int idx) const { return idx < rs_.num_positive(); }

  Rat compute(int a, int b, int s) {
    const int P = rs_.num_positive();
    if (positive(a) && positive(b)) {
      if (a > b) return -N(b, a);
      auto [a1, b1] = expair_[s];
      if (a == a1) return Rat(chain_p(a, b) + 1);
      // Jacobi on (a, b, -a1, -b1):
      //   N(a,b) N(s,-a1) + N(b,-a1) N(b-a1,a) + N(-a1,a) N(a-a1,b) = 0
      Rat t2 = 0, t3 = 0;
      int b_m_a1 = rs_.sum_index(b, rs_.negative_of(a1));
      if (b_m_a1 >= 0) t2 = N(b, rs_.negative_of(a1)) * N(b_m_a1, a);
      int a_m_a1 = rs_.sum_index(a, rs_.negative_of(a1));
      if (a_m_a1 >= 0) t3 = N(rs_.negative_of(a1), a) * N(a_m_a1, b);
      Rat denom = N(s, rs_.negative_of(a1));
      assert(denom != 0);
      return -(t2 + t3) / denom;
    }
    if (!positive(a) && !positive(b)) return -N(a - P, b - P);
    // mixed pair: reduce N(x, -y) with x, y positive
    if (positive(a)) {
      int x = a, y = rs_.negative_of(b);
      if (positive(s)) {
        // x = y + s
        return norm2_[s] / norm2_[x] * N(s, y);
      }
      int w = rs_.negative_of(s);  // y = x + w
      return norm2_[w] / norm2_[y] * N(w, x);
    }
    return -N(b, a);
  }

  const RootSystem& rs_;
  std::vector<Rat> norm2_;
  std::vector<std::pair<int, int>> expair_;
  std::map<std::pair<int, int>, Rat> memo_;
};

}  // namespace

ChevalleyAlgebra ChevalleyAlgebra::build(RootSystem rs) {
  ChevalleyAlgebra g(std::move(rs));
  const RootSystem& R = g.rs_;
  const int nr = R.num_roots();
  const int n = R.rank();
  g.dim_ = nr + n;
  g.table_.assign(size_t(g.dim_) * g.dim_, {});

  SignTable signs(R);

  auto set_entry = [&](int i, int j, std::vector<std::pair<int, Rat>> val) {
    g.table_[size_t(i) * g.dim_ + j] = std::move(val);
  };

  // [e_a, e_b]
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b) {
      if (b == R.negative_of(a)) {
        QVec h = g.coroot_coords(a);
        std::vector<std::pair<int, Rat>> v;
        for (int i = 0; i < n; ++i)
          if (h[i] != 0) v.emplace_back(nr + i, h[i]);
        set_entry(a, b, std::move(v));
        continue;
      }
      int s = R.sum_index(a, b);
      if (s >= 0) set_entry(a, b, {{s, signs.N(a, b)}});
    }

  // [h_i, e_b] = <b, alpha_i^vee> e_b
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < nr; ++b) {
      int pairing = 0;
      for (int k = 0; k < n; ++k) pairing += R.root(b).coords[k] * R.cartan()[k][i];
      if (pairing != 0) {
        set_entry(nr + i, b, {{b, Rat(pairing)}});
        set_entry(b, nr + i, {{b, Rat(-pairing)}});
      }
    }
  return g;
}

LieElement ChevalleyAlgebra::e(int root_idx, Rat c) const {
  if (c == 0) return zero();
  return LieElement{this, {{root_idx, std::move(c)}}};
}

LieElement ChevalleyAlgebra::h(int i, Rat c) const {
  if (c == 0) return zero();
  return LieElement{this, {{rs_.num_roots() + i, std::move(c)}}};
}

LieElement ChevalleyAlgebra::element(const QVec& dense) const {
  LieElement x{this, {}};
  for (int i = 0; i < int(dense.size()); ++i)
    if (dense[i] != 0) x.terms.emplace_back(i, dense[i]);
  return x;
}

LieElement ChevalleyAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  if (x.alg != this || y.alg != this)
    throw std::invalid_argument("bracket: elements over mismatched algebras");
  QVec acc(dim_, Rat(0));
  for (const auto& [i, ci] : x.terms)
    for (const auto& [j, cj] : y.terms) {
      const auto& entry = bracket_basis(i, j);
      Rat f = ci * cj;
      for (const auto& [k, ck] : entry) acc[k] += f * ck;
    }
  return element(acc);
}

QMat ChevalleyAlgebra::ad_matrix(const LieElement& x) const {
  QMat m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    for (const auto& [i, ci] : x.terms) {
      for (const auto& [k, ck] : bracket_basis(i, j)) m.at(k, j) += ci * ck;
    }
  }
  return m;
}

Rat ChevalleyAlgebra::structure_constant(int a, int b) const {
  int s = rs_.sum_index(a, b);
  if (s < 0) return Rat(0);
  const auto& entry = bracket_basis(a, b);
  assert(entry.size() == 1 && entry[0].first == s);
  return entry[0].second;
}

QVec ChevalleyAlgebra::coroot_coords(int root_idx) const {
  const Root& r = rs_.root(root_idx);
  Weight w = rs_.weight_of_root(root_idx);
  Rat d_gamma = rs_.inner(w, w) / 2;
  QVec out(rs_.rank());
  for (int i = 0; i < rs_.rank(); ++i) {
    out[i] = Rat(r.coords[i]) * Rat(rs_.norm_numerator(i)) / d_gamma;
    assert(out[i].get_den() == 1);
  }
  return out;
}

std::vector<LieElement> ChevalleyAlgebra::generated_subalgebra(
    const std::vector<LieElement>& gens) const {
  RowSpan span(dim_);
  std::vector<LieElement> work;
  for (const auto& gen : gens) {
    if (gen.alg != this) throw std::invalid_argument("generated_subalgebra: algebra mismatch");
    if (span.insert(gen.dense()).added) work.push_back(gen);
  }
  for (size_t head = 0; head < work.size(); ++head) {
    LieElement x = work[head];
    for (const auto& gen : gens) {
      LieElement y = bracket(gen, x);
      if (y.is_zero()) continue;
      if (span.insert(y.dense()).added) work.push_back(y);
    }
  }
  QMat basis = QMat::from_rows(span.rows());
  rref(basis);
  std::vector<LieElement> out;
  for (int i = 0; i < basis.rows(); ++i) out.push_back(element(basis.row(i)));
  return out;
}

std::vector<LieElement> ChevalleyAlgebra::centralizer_in_g(const LieElement& x) const {
  QMat k = kernel_basis(ad_matrix(x));
  std::vector<LieElement> out;
  for (int i = 0; i < k.rows(); ++i) out.push_back(element(k.row(i)));
  return out;
}

Rat ChevalleyAlgebra::killing(const LieElement& x, const LieElement& y) const {
  return QMat::trace_of_product(ad_matrix(x), ad_matrix(y));
}

bool ChevalleyAlgebra::is_nilpotent(const LieElement& x) const {
  QMat m = ad_matrix(x);
  QMat w = m;
  for (int step = 0; step < dim_ + 1; ++step) {
    if (w.is_zero()) return true;
    w = w * m;
  }
  return false;
}

bool ChevalleyAlgebra::is_nondegenerate(const LieElement& x) const {
  std::vector<bool> touched(rs_.num_components(), false);
  for (const auto& [i, c] : x.terms) {
    if (is_root_vector(i))
      touched[rs_.component_of_root(i)] = true;
    else
      touched[rs_.component_of_simple(i - rs_.num_roots())] = true;
  }
  for (bool t : touched)
    if (!t) return false;
  return true;
}

}  // namespace lieq
