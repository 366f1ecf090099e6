#include "lieq/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace lieq {

int Root::height() const {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}

bool Weight::is_integral() const {
  for (const auto& c : fund_coords)
    if (c.get_den() != 1) return false;
  return true;
}

bool Weight::in_root_lattice() const {
  for (const auto& c : root_coords)
    if (c.get_den() != 1) return false;
  return true;
}

bool Weight::is_dominant() const {
  for (const auto& c : fund_coords)
    if (c < 0) return false;
  return true;
}

namespace {

struct CartanData {
  std::vector<std::vector<int>> c;
  std::vector<int> d;  // (alpha_i,alpha_i)/2, short roots normalized to 1
};

void add_edge(CartanData& cd, int i, int j) { cd.c[i][j] = cd.c[j][i] = -1; }

CartanData cartan_for(TypeRank t) {
  const int n = t.rank;
  auto bad = [&] {
    throw std::invalid_argument(std::string("invalid simple type ") + t.letter +
                                std::to_string(t.rank));
  };
  CartanData cd;
  cd.c.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cd.c[i][i] = 2;
  cd.d.assign(n, 1);
  switch (t.letter) {
    case 'A':
      if (n < 1) bad();
      for (int i = 0; i + 1 < n; ++i) add_edge(cd, i, i + 1);
      break;
    case 'B':
      if (n < 2) bad();
      for (int i = 0; i + 2 < n; ++i) add_edge(cd, i, i + 1);
      cd.c[n - 2][n - 1] = -2;
      cd.c[n - 1][n - 2] = -1;
      for (int i = 0; i + 1 < n; ++i) cd.d[i] = 2;
      break;
    case 'C':
      if (n < 2) bad();
      for (int i = 0; i + 2 < n; ++i) add_edge(cd, i, i + 1);
      cd.c[n - 2][n - 1] = -1;
      cd.c[n - 1][n - 2] = -2;
      cd.d[n - 1] = 2;
      break;
    case 'D':
      if (n < 3) bad();
      for (int i = 0; i + 3 < n; ++i) add_edge(cd, i, i + 1);
      add_edge(cd, n - 3, n - 2);
      add_edge(cd, n - 3, n - 1);
      break;
    case 'E': {
      if (n < 6 || n > 8) bad();
      add_edge(cd, 0, 2);
      add_edge(cd, 2, 3);
      add_edge(cd, 1, 3);
      add_edge(cd, 3, 4);
      add_edge(cd, 4, 5);
      if (n >= 7) add_edge(cd, 5, 6);
      if (n == 8) add_edge(cd, 6, 7);
      break;
    }
    case 'F':
      if (n != 4) bad();
      add_edge(cd, 0, 1);
      cd.c[1][2] = -2;
      cd.c[2][1] = -1;
      add_edge(cd, 2, 3);
      cd.d[0] = cd.d[1] = 2;
      break;
    case 'G':
      if (n != 2) bad();
      cd.c[0][1] = -1;
      cd.c[1][0] = -3;
      cd.d[1] = 3;
      break;
    default:
      bad();
  }
  return cd;
}

std::vector<std::vector<Rat>> invert(const std::vector<std::vector<int>>& c) {
  const int n = int(c.size());
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = c[i][j];
    aug.at(i, n + i) = 1;
  }
  int rank = rref(aug);
  if (rank != n) throw std::logic_error("Cartan matrix singular");
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug.at(i, n + j);
  return inv;
}

Int det_of(const std::vector<std::vector<int>>& c) {
  const int n = int(c.size());
  QMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = c[i][j];
  // plain elimination tracking the determinant
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Rat inv = 1 / m.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      Rat f = m.at(i, col) * inv;
      if (f == 0) continue;
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  assert(det.get_den() == 1);
  return det.get_num();
}

}  // namespace

RootSystem RootSystem::build(const std::vector<TypeRank>& components) {
  if (components.empty()) throw std::invalid_argument("empty type list");
  RootSystem rs;
  rs.components_ = components;
  for (const auto& t : components) rs.rank_ += t.rank;
  const int n = rs.rank_;

  rs.cartan_.assign(n, std::vector<int>(n, 0));
  rs.d_.assign(n, 1);
  rs.comp_of_simple_.assign(n, 0);
  int off = 0, comp = 0;
  for (const auto& t : components) {
    CartanData cd = cartan_for(t);
    for (int i = 0; i < t.rank; ++i) {
      rs.comp_of_simple_[off + i] = comp;
      rs.d_[off + i] = cd.d[i];
      for (int j = 0; j < t.rank; ++j) rs.cartan_[off + i][off + j] = cd.c[i][j];
    }
    off += t.rank;
    ++comp;
  }

  rs.inverse_cartan_ = invert(rs.cartan_);
  rs.index_of_connection_ = det_of(rs.cartan_);
  assert(rs.index_of_connection_ > 0);

  rs.sym_.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.sym_[i][j] = Rat(rs.d_[j] * rs.cartan_[i][j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) assert(rs.sym_[i][j] == rs.sym_[j][i]);

  // generate all roots: closure of the simple roots under simple reflections
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(n, 0);
    v[i] = 1;
    seen.insert(v);
    queue.push_back(v);
  }
  while (!queue.empty()) {
    std::vector<int> v = queue.back();
    queue.pop_back();
    for (int j = 0; j < n; ++j) {
      int pairing = 0;
      for (int i = 0; i < n; ++i) pairing += v[i] * rs.cartan_[i][j];
      std::vector<int> w = v;
      w[j] -= pairing;
      if (seen.insert(w).second) queue.push_back(w);
    }
  }

  std::vector<Root> positives;
  for (const auto& v : seen) {
    Root r{v};
    bool pos = true, neg = true;
    for (int c : v) {
      if (c < 0) pos = false;
      if (c > 0) neg = false;
    }
    if (!pos && !neg) throw std::logic_error("non sign-homogeneous root generated");
    if (pos) positives.push_back(r);
  }
  std::sort(positives.begin(), positives.end(), [](const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coords < b.coords;
  });
  rs.num_positive_ = int(positives.size());
  rs.all_roots_ = positives;
  for (const auto& r : positives) {
    Root m = r;
    for (int& c : m.coords) c = -c;
    rs.all_roots_.push_back(m);
  }
  for (size_t i = 0; i < rs.all_roots_.size(); ++i)
    rs.root_lookup_[rs.all_roots_[i].coords] = int(i);

  const int nr = rs.num_roots();
  rs.sum_table_.assign(nr, std::vector<int>(nr, -1));
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j) {
      std::vector<int> s(n);
      for (int k = 0; k < n; ++k) s[k] = rs.all_roots_[i].coords[k] + rs.all_roots_[j].coords[k];
      auto it = rs.root_lookup_.find(s);
      if (it != rs.root_lookup_.end()) rs.sum_table_[i][j] = it->second;
    }

  for (int j = 0; j < n; ++j) {
    QVec rc(n);
    for (int i = 0; i < n; ++i) rc[i] = rs.inverse_cartan_[j][i];
    rs.fund_weights_.push_back(rs.weight_from_root_coords(rc));
  }
  return rs;
}

std::vector<TypeRank> RootSystem::parse_type(const std::string& s) {
  std::vector<TypeRank> out;
  size_t i = 0;
  while (i < s.size()) {
    char letter = std::toupper(s[i++]);
    size_t j = i;
    while (j < s.size() && std::isdigit(s[j])) ++j;
    if (j == i) throw std::invalid_argument("bad type string: " + s);
    out.push_back({letter, std::stoi(s.substr(i, j - i))});
    i = j;
    if (i < s.size()) {
      if (s[i] != '+' && s[i] != 'x') throw std::invalid_argument("bad type string: " + s);
      ++i;
    }
  }
  if (out.empty()) throw std::invalid_argument("bad type string: " + s);
  return out;
}

std::string RootSystem::type_string() const {
  std::string s;
  for (size_t i = 0; i < components_.size(); ++i) {
    if (i) s += "+";
    s += components_[i].letter;
    s += std::to_string(components_[i].rank);
  }
  return s;
}

int RootSystem::root_index(const std::vector<int>& coords) const {
  auto it = root_lookup_.find(coords);
  return it == root_lookup_.end() ? -1 : it->second;
}

int RootSystem::negative_of(int idx) const {
  return idx < num_positive_ ? idx + num_positive_ : idx - num_positive_;
}

int RootSystem::sum_index(int i, int j) const { return sum_table_[i][j]; }

int RootSystem::simple_root_index(int i) const {
  std::vector<int> v(rank_, 0);
  v[i] = 1;
  int idx = root_index(v);
  assert(idx >= 0);
  return idx;
}

Weight RootSystem::weight_from_root_coords(QVec rc) const {
  Weight w;
  w.fund_coords.assign(rank_, Rat(0));
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < rank_; ++i)
      if (rc[i] != 0) w.fund_coords[j] += rc[i] * Rat(cartan_[i][j]);
  w.root_coords = std::move(rc);
  return w;
}

Weight RootSystem::weight_from_fund_coords(QVec fc) const {
  Weight w;
  w.root_coords.assign(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (fc[j] != 0) w.root_coords[i] += fc[j] * inverse_cartan_[j][i];
  w.fund_coords = std::move(fc);
  return w;
}

Weight RootSystem::weight_of_root(int idx) const {
  QVec rc(rank_);
  for (int i = 0; i < rank_; ++i) rc[i] = all_roots_[idx].coords[i];
  return weight_from_root_coords(std::move(rc));
}

Weight RootSystem::zero_weight() const { return weight_from_root_coords(QVec(rank_, Rat(0))); }

Weight RootSystem::rho() const { return weight_from_fund_coords(QVec(rank_, Rat(1))); }

Rat RootSystem::inner(const Weight& a, const Weight& b) const {
  Rat s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a.root_coords[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (b.root_coords[j] != 0) s += a.root_coords[i] * sym_[i][j] * b.root_coords[j];
  }
  return s;
}

Rat RootSystem::inner_root_weight(int root_idx, const Weight& w) const {
  Rat s = 0;
  const Root& r = all_roots_[root_idx];
  for (int i = 0; i < rank_; ++i) {
    if (r.coords[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (w.root_coords[j] != 0) s += Rat(r.coords[i]) * sym_[i][j] * w.root_coords[j];
  }
  return s;
}

Rat RootSystem::coroot_pairing(int root_idx, const Weight& w) const {
  const Root& r = all_roots_[root_idx];
  Rat norm = 0;  // (gamma, gamma)
  for (int i = 0; i < rank_; ++i) {
    if (r.coords[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (r.coords[j] != 0) norm += Rat(r.coords[i]) * sym_[i][j] * Rat(r.coords[j]);
  }
  return 2 * inner_root_weight(root_idx, w) / norm;
}

Rat RootSystem::pi_height(const std::vector<int>& pi_prime, const Weight& w) const {
  Rat s = 0;
  for (int i : pi_prime) s += w.root_coords[i];
  return s;
}

int RootSystem::pi_height_root(const std::vector<int>& pi_prime, int root_idx) const {
  int s = 0;
  for (int i : pi_prime) s += all_roots_[root_idx].coords[i];
  return s;
}

std::pair<std::vector<int>, std::vector<int>> RootSystem::dynkin_bipartition() const {
  std::vector<int> color(rank_, -1);
  for (int start = 0; start < rank_; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < rank_; ++j) {
        if (j == i || cartan_[i][j] == 0) continue;
        if (color[j] < 0) {
          color[j] = 1 - color[i];
          stack.push_back(j);
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> parts;
  for (int i = 0; i < rank_; ++i)
    (color[i] == 0 ? parts.first : parts.second).push_back(i);
  return parts;
}

int RootSystem::component_of_root(int idx) const {
  const Root& r = all_roots_[idx];
  for (int i = 0; i < rank_; ++i)
    if (r.coords[i] != 0) return comp_of_simple_[i];
  throw std::logic_error("zero root");
}

int RootSystem::highest_root_index() const {
  if (!is_simple()) throw std::invalid_argument("highest root needs a simple system");
  return num_positive_ - 1;  // positives sorted by height; maximum is unique
}

Weight RootSystem::simple_reflection(int i, const Weight& w) const {
  Rat pairing = w.fund_coords[i];
  QVec rc = w.root_coords;
  rc[i] -= pairing;
  return weight_from_root_coords(std::move(rc));
}

Weight RootSystem::dominant_representative(const Weight& w) const {
  Weight v = w;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rank_; ++i)
      if (v.fund_coords[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return v;
    v = simple_reflection(neg, v);
  }
}

}  // namespace lieq
