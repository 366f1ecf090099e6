#include "lieq/closedsets.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <stdexcept>

#include "lieq/linalg.hpp"

namespace lieq {

int Bitset::count() const {
  int c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool Bitset::none() const {
  for (uint64_t w : w_)
    if (w) return false;
  return true;
}

bool Bitset::operator<(const Bitset& o) const {
  assert(n_ == o.n_);
  for (int i = int(w_.size()) - 1; i >= 0; --i)
    if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
  return false;
}

Bitset Bitset::operator|(const Bitset& o) const {
  Bitset r = *this;
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] |= o.w_[i];
  return r;
}

Bitset Bitset::operator&(const Bitset& o) const {
  Bitset r = *this;
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
  return r;
}

bool Bitset::is_subset_of(const Bitset& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

std::vector<int> Bitset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

RootSubset make_subset(const RootSystem& rs, const std::vector<int>& root_indices) {
  RootSubset g{&rs, Bitset(rs.num_roots())};
  for (int i : root_indices) g.members.set(i);
  return g;
}

RootSubset empty_subset(const RootSystem& rs) { return RootSubset{&rs, Bitset(rs.num_roots())}; }

bool RootSubset::is_closed(std::pair<int, int>* offending) const {
  auto idx = indices();
  for (int a : idx)
    for (int b : idx) {
      int s = rs->sum_index(a, b);
      if (s >= 0 && !members.test(s)) {
        if (offending) *offending = {a, b};
        return false;
      }
    }
  return true;
}

bool RootSubset::disjoint_from_negative(int* offending) const {
  for (int a : indices())
    if (members.test(rs->negative_of(a))) {
      if (offending) *offending = a;
      return false;
    }
  return true;
}

bool RootSubset::is_abelian() const {
  auto idx = indices();
  for (int a : idx)
    for (int b : idx)
      if (rs->sum_index(a, b) >= 0) return false;
  return true;
}

RootSubset closure(const RootSubset& g) {
  RootSubset c = g;
  std::vector<int> work = c.indices();
  std::vector<int> members = work;
  while (!work.empty()) {
    int a = work.back();
    work.pop_back();
    for (size_t k = 0; k < members.size(); ++k) {
      int s = c.rs->sum_index(a, members[k]);
      if (s >= 0 && !c.members.test(s)) {
        c.members.set(s);
        members.push_back(s);
        work.push_back(s);
      }
    }
  }
  return c;
}

WideVerdict is_wide_criterion(const RootSubset& g) {
  std::pair<int, int> bad;
  if (!g.is_closed(&bad)) {
    const auto& r1 = g.rs->root(bad.first).coords;
    const auto& r2 = g.rs->root(bad.second).coords;
    std::string msg = "is_wide_criterion: subset not closed, offending pair (";
    for (int c : r1) msg += std::to_string(c) + " ";
    msg += ") + (";
    for (int c : r2) msg += std::to_string(c) + " ";
    msg += ")";
    throw std::invalid_argument(msg);
  }
  int badroot;
  if (!g.disjoint_from_negative(&badroot))
    throw std::invalid_argument("is_wide_criterion: subset meets its negative at root index " +
                                std::to_string(badroot));
  RootSubset sym = g;
  for (int a : g.indices()) sym.members.set(g.rs->negative_of(a));
  RootSubset cl = closure(sym);
  bool wide = cl.size() == g.rs->num_roots();
  return {wide, cl};
}

RootSubset parabolic_nilradical_set(const RootSystem& rs, const std::vector<int>& pi_prime) {
  RootSubset g = empty_subset(rs);
  for (int i = 0; i < rs.num_roots(); ++i)
    if (rs.pi_height_root(pi_prime, i) > 0) g.members.set(i);
  return g;
}

RootSubset pi_partition_set(const RootSystem& rs, const std::vector<int>& pi_prime) {
  RootSubset g = empty_subset(rs);
  std::vector<bool> in_prime(rs.rank(), false);
  for (int i : pi_prime) in_prime[i] = true;
  for (int i = 0; i < rs.rank(); ++i) {
    int idx = rs.simple_root_index(i);
    g.members.set(in_prime[i] ? idx : rs.negative_of(idx));
  }
  return closure(g);
}

RootSubset derived_uplus_set(const RootSystem& rs) {
  RootSubset g = empty_subset(rs);
  for (int i = 0; i < rs.num_positive(); ++i)
    if (rs.root(i).height() > 1) g.members.set(i);
  return g;
}

// ---------------------------------------------------------------------------
// Cones

namespace {

// pairing row: (mu, gamma) = sum_j row[j] * mu.root_coords[j]
QVec pairing_row(const RootSystem& rs, int root_idx) {
  QVec row(rs.rank(), Rat(0));
  const Root& r = rs.root(root_idx);
  for (int j = 0; j < rs.rank(); ++j)
    for (int i = 0; i < rs.rank(); ++i)
      if (r.coords[i] != 0) row[j] += Rat(r.coords[i]) * rs.sym()[i][j];
  return row;
}

std::vector<Int> primitive_direction(const QVec& v) {
  Int lcm = 1;
  for (const auto& x : v) {
    Int den = x.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<Int> out;
  Int gcd = 0;
  for (const auto& x : v) {
    Int num = x.get_num() * (lcm / x.get_den());
    out.push_back(num);
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), num.get_mpz_t());
  }
  if (gcd != 0)
    for (auto& x : out) x /= gcd;
  return out;
}

struct DDRay {
  QVec v;
  Bitset tight;  // over the constraint list
};

}  // namespace

bool Cone::contains(const Weight& w) const {
  for (int idx : defining)
    if (rs->inner_root_weight(idx, w) < 0) return false;
  return true;
}

bool Cone::has_generator_ray(const Weight& w) const {
  std::vector<Int> dir = primitive_direction(w.root_coords);
  for (const auto& g : generators)
    if (g == dir) return true;
  return false;
}

Cone cone_of(const RootSubset& g) {
  const RootSystem& rs = *g.rs;
  Cone cone;
  cone.rs = &rs;
  cone.defining = g.indices();
  const int n = rs.rank();
  const int m = int(cone.defining.size());

  std::vector<QVec> rows;
  for (int idx : cone.defining) rows.push_back(pairing_row(rs, idx));
  QMat all = QMat::from_rows(rows);
  cone.strictly_convex = (m > 0 && rank_of(all) == n);
  if (!cone.strictly_convex) return cone;

  // greedy choice of n independent constraints for the initial simplicial cone
  std::vector<int> chosen;
  {
    RowSpan span(n);
    for (int k = 0; k < m && int(chosen.size()) < n; ++k)
      if (span.insert(rows[k]).added) chosen.push_back(k);
  }
  QMat A(n, n);
  for (int i = 0; i < n; ++i) A.set_row(i, rows[chosen[i]]);
  // rays = columns of A^-1
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = 1;
  }
  rref(aug);
  std::vector<DDRay> rays;
  for (int j = 0; j < n; ++j) {
    DDRay r;
    r.v.resize(n);
    for (int i = 0; i < n; ++i) r.v[i] = aug.at(i, n + j);
    r.tight = Bitset(m);
    for (int i = 0; i < n; ++i)
      if (i != j) r.tight.set(chosen[i]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> processed(m, false);
  for (int c : chosen) processed[c] = true;

  auto dot = [&](const QVec& a, const QVec& b) {
    Rat s = 0;
    for (int i = 0; i < int(a.size()); ++i) s += a[i] * b[i];
    return s;
  };

  for (int k = 0; k < m; ++k) {
    if (processed[k]) continue;
    processed[k] = true;
    std::vector<Rat> val(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) val[i] = dot(rows[k], rays[i].v);

    std::vector<DDRay> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (val[i] > 0) next.push_back(rays[i]);
      if (val[i] == 0) {
        DDRay r = rays[i];
        r.tight.set(k);
        next.push_back(std::move(r));
      }
    }
    for (size_t i = 0; i < rays.size(); ++i) {
      if (val[i] <= 0) continue;
      for (size_t j = 0; j < rays.size(); ++j) {
        if (val[j] >= 0) continue;
        // adjacency: no third ray's tight set contains tight(i) n tight(j)
        Bitset common = rays[i].tight & rays[j].tight;
        bool adjacent = true;
        for (size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == i || t == j) continue;
          if (common.is_subset_of(rays[t].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        DDRay r;
        r.v.resize(n);
        for (int d = 0; d < n; ++d) r.v[d] = val[i] * rays[j].v[d] - val[j] * rays[i].v[d];
        r.tight = common;
        r.tight.set(k);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  for (const auto& r : rays) cone.generators.push_back(primitive_direction(r.v));
  std::sort(cone.generators.begin(), cone.generators.end());
  return cone;
}

// ---------------------------------------------------------------------------
// Census of closed subsets with G n -G empty

namespace {

std::string simple_set_name(const RootSystem& rs, const std::vector<int>& pi_prime) {
  if (pi_prime.empty()) return "{}";
  std::string s = "{";
  for (size_t i = 0; i < pi_prime.size(); ++i) {
    if (i) s += ",";
    s += "a" + std::to_string(pi_prime[i] + 1);
  }
  return s + "}";
}

struct CensusState {
  const RootSystem& rs;
  std::vector<int8_t> state;  // 0 undecided, 1 in, 2 out
  std::vector<int> force_in;
  std::vector<int> in_list;
  long emitted = 0;
  long max_results;
  const std::function<bool(const CensusRecord&)>& yield;
  std::map<Bitset, std::vector<std::string>> family;
  bool stop = false;

  CensusState(const RootSystem& r, long mx, const std::function<bool(const CensusRecord&)>& y)
      : rs(r), state(r.num_roots(), 0), force_in(r.num_roots(), 0), max_results(mx), yield(y) {}

  void emit() {
    if (stop) return;
    if (max_results >= 0 && emitted >= max_results) {
      stop = true;
      return;
    }
    CensusRecord rec;
    rec.subset = empty_subset(rs);
    for (int i : in_list) rec.subset.members.set(i);
    assert(rec.subset.is_closed() && rec.subset.disjoint_from_negative());
    WideVerdict v = is_wide_criterion(rec.subset);
    rec.wide = v.wide;
    rec.witness = v.closure_sym;
    rec.size = rec.subset.size();
    rec.abelian = rec.subset.is_abelian();
    auto it = family.find(rec.subset.members);
    if (it != family.end()) rec.family_tags = it->second;
    ++emitted;
    if (!yield(rec)) stop = true;
  }

  void decide(int i) {
    if (stop) return;
    if (i < 0) {
      emit();
      return;
    }
    // exclude first: ascending bitset order
    if (force_in[i] == 0) {
      state[i] = 2;
      decide(i - 1);
      state[i] = 0;
      if (stop) return;
    }
    // include
    if (state[rs.negative_of(i)] == 1) return;
    std::vector<int> bumped;
    bool ok = true;
    for (int j : in_list) {
      int s = rs.sum_index(i, j);
      if (s < 0) continue;
      if (state[s] == 2) {
        ok = false;
        break;
      }
      if (state[s] == 0) {
        ++force_in[s];
        bumped.push_back(s);
      }
      // state[s] == 1: already in, nothing to do
    }
    if (ok) {
      state[i] = 1;
      in_list.push_back(i);
      decide(i - 1);
      in_list.pop_back();
      state[i] = 0;
    }
    for (int s : bumped) --force_in[s];
  }
};

}  // namespace

void enumerate_census(const RootSystem& rs, long max_results,
                      const std::function<bool(const CensusRecord&)>& yield) {
  if (rs.num_roots() > 24)
    throw std::invalid_argument("census: root count " + std::to_string(rs.num_roots()) +
                                " exceeds the guard (24)");
  CensusState st(rs, max_results, yield);

  // family tags, precomputed over all Pi' subsets
  const int n = rs.rank();
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> pi;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) pi.push_back(i);
    if (!pi.empty())
      st.family[parabolic_nilradical_set(rs, pi).members].push_back("parabolic-nilradical" +
                                                                    simple_set_name(rs, pi));
    st.family[pi_partition_set(rs, pi).members].push_back("pi-partition" +
                                                          simple_set_name(rs, pi));
  }
  st.family[derived_uplus_set(rs).members].push_back("derived-uplus");
  for (auto& [k, tags] : st.family) std::sort(tags.begin(), tags.end());

  st.decide(rs.num_roots() - 1);
}

}  // namespace lieq
