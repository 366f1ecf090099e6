#include "lieq/repmod.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>
#include <stdexcept>

namespace lieq {

Int weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_integral() || !lambda.is_dominant())
    throw std::invalid_argument("weyl_dim: weight not dominant integral");
  Weight rho = rs.rho();
  QVec lr = lambda.root_coords;
  for (int i = 0; i < rs.rank(); ++i) lr[i] += rho.root_coords[i];
  Weight lam_rho = rs.weight_from_root_coords(lr);
  Rat prod = 1;
  for (int i = 0; i < rs.num_positive(); ++i)
    prod *= rs.inner_root_weight(i, lam_rho) / rs.inner_root_weight(i, rho);
  assert(prod.get_den() == 1);
  return prod.get_num();
}

namespace {

// box bound: all weights nu of R(lambda) satisfy lambda - nu >= 0 and
// nu >= w0(lambda) coordinatewise, i.e. lambda - nu <= lambda - w0(lambda)
std::vector<Int> weight_box(const RootSystem& rs, const Weight& lambda) {
  Weight neg = rs.weight_from_root_coords([&] {
    QVec v = lambda.root_coords;
    for (auto& x : v) x = -x;
    return v;
  }());
  Weight lamstar = rs.dominant_representative(neg);  // -w0(lambda)
  std::vector<Int> box(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    Rat b = lambda.root_coords[i] + lamstar.root_coords[i];
    assert(b.get_den() == 1 && b >= 0);
    box[i] = b.get_num();
  }
  return box;
}

}  // namespace

std::vector<WeightMult> freudenthal(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_integral() || !lambda.is_dominant())
    throw std::invalid_argument("freudenthal: weight not dominant integral");
  const int n = rs.rank();
  std::vector<Int> box = weight_box(rs, lambda);

  // dominant weights below lambda inside the box, via BFS on depth vectors
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> queue;
  std::vector<std::pair<std::vector<Int>, Weight>> dominants;  // (depth vec, weight)
  seen.insert(std::vector<Int>(n, 0));
  queue.push_back(std::vector<Int>(n, 0));
  while (!queue.empty()) {
    std::vector<Int> depth = queue.back();
    queue.pop_back();
    QVec rc = lambda.root_coords;
    for (int i = 0; i < n; ++i) rc[i] -= Rat(depth[i]);
    Weight w = rs.weight_from_root_coords(rc);
    if (w.is_dominant()) dominants.emplace_back(depth, w);
    for (int i = 0; i < n; ++i) {
      if (depth[i] + 1 > box[i]) continue;
      std::vector<Int> next = depth;
      ++next[i];
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  // process by increasing total depth
  std::sort(dominants.begin(), dominants.end(), [](const auto& a, const auto& b) {
    Int sa = 0, sb = 0;
    for (const auto& x : a.first) sa += x;
    for (const auto& x : b.first) sb += x;
    if (sa != sb) return sa < sb;
    return a.first < b.first;
  });

  Weight rho = rs.rho();
  auto shifted_norm = [&](const Weight& w) {
    QVec v = w.root_coords;
    for (int i = 0; i < n; ++i) v[i] += rho.root_coords[i];
    Weight t = rs.weight_from_root_coords(v);
    return rs.inner(t, t);
  };
  const Rat lam_norm = shifted_norm(lambda);

  std::map<QVec, Int> mult;  // keyed by root coords of dominant weights
  mult[lambda.root_coords] = 1;

  for (const auto& [depth, mu] : dominants) {
    bool is_top = true;
    for (const auto& d : depth)
      if (d != 0) is_top = false;
    if (is_top) continue;
    Rat denom = lam_norm - shifted_norm(mu);
    assert(denom != 0);
    Rat sum = 0;
    for (int gi = 0; gi < rs.num_positive(); ++gi) {
      const Root& gamma = rs.root(gi);
      for (int k = 1;; ++k) {
        QVec rc = mu.root_coords;
        bool inside = true;
        for (int i = 0; i < n; ++i) {
          rc[i] += Rat(k) * gamma.coords[i];
          Rat rem = lambda.root_coords[i] - rc[i];
          if (rem < 0 || rem.get_den() != 1) inside = false;
        }
        if (!inside) break;
        Weight xi = rs.weight_from_root_coords(rc);
        Weight dom = rs.dominant_representative(xi);
        auto it = mult.find(dom.root_coords);
        if (it == mult.end()) continue;
        sum += Rat(it->second) * rs.inner_root_weight(gi, xi);
      }
    }
    Rat m = 2 * sum / denom;
    assert(m.get_den() == 1 && m > 0);
    mult[mu.root_coords] = m.get_num();
  }

  // expand Weyl orbits
  std::vector<WeightMult> out;
  for (const auto& [rc, m] : mult) {
    Weight dom = rs.weight_from_root_coords(rc);
    std::set<QVec> orbit;
    std::vector<Weight> work = {dom};
    orbit.insert(dom.root_coords);
    while (!work.empty()) {
      Weight w = work.back();
      work.pop_back();
      for (int i = 0; i < n; ++i) {
        Weight s = rs.simple_reflection(i, w);
        if (orbit.insert(s.root_coords).second) work.push_back(s);
      }
    }
    for (const auto& orc : orbit) out.push_back({rs.weight_from_root_coords(orc), m});
  }
  std::sort(out.begin(), out.end(),
            [](const WeightMult& a, const WeightMult& b) { return a.weight < b.weight; });
  return out;
}

Rat ModuleGrading::top_degree() const {
  assert(!pieces.empty());
  return pieces.rbegin()->first;
}

int ModuleGrading::dim_at(const Rat& d) const {
  auto it = pieces.find(d);
  return it == pieces.end() ? 0 : int(it->second.size());
}

// ---------------------------------------------------------------------------
// Module construction

namespace {
using SparseVec = std::vector<std::pair<int, Rat>>;

QVec densify(const SparseVec& v, int len) {
  QVec out(len, Rat(0));
  for (const auto& [i, c] : v) out[i] = c;
  return out;
}
}  // namespace

IrrModule IrrModule::build(const ChevalleyAlgebra& g, const Weight& lambda, long dim_cap) {
  Int wdim = weyl_dim(g.roots(), lambda);  // validates dominance/integrality
  if (wdim > dim_cap)
    throw std::invalid_argument("build_irrep: dimension " + wdim.get_str() +
                                " exceeds the cap " + std::to_string(dim_cap));
  const RootSystem& rs = g.roots();
  const int n = rs.rank();

  IrrModule m;
  m.g_ = &g;
  m.lambda_ = lambda;

  // growing sparse columns of the generator actions
  std::vector<std::vector<SparseVec>> ecol(n), fcol(n);
  std::vector<Weight> vweight = {lambda};
  for (int i = 0; i < n; ++i) ecol[i].push_back({});  // e_i kills the top
  std::vector<int> level = {0};
  std::map<QVec, std::pair<int, int>> block_of;  // root coords -> (offset, size)
  block_of[lambda.root_coords] = {0, 1};

  while (!level.empty()) {
    const int old_count = int(vweight.size());
    for (int i = 0; i < n; ++i) fcol[i].resize(old_count);

    // candidates f_i u grouped by target weight
    std::map<QVec, std::vector<std::pair<int, int>>> groups;  // root coords -> (i, u)
    for (int u : level)
      for (int i = 0; i < n; ++i) {
        QVec rc = vweight[u].root_coords;
        rc[i] -= 1;
        groups[rc].emplace_back(i, u);
      }

    std::vector<int> next_level;
    for (auto& [rc, cands] : groups) {
      Weight mu = rs.weight_from_root_coords(rc);
      // the raising images live in the parent blocks mu + alpha_j; the
      // dependence signature only needs those coordinates
      std::vector<int> win_off(n, -1), win_size(n, 0), win_start(n, 0);
      int width = 0;
      for (int j = 0; j < n; ++j) {
        QVec prc = rc;
        prc[j] += 1;
        auto it = block_of.find(prc);
        if (it != block_of.end()) {
          win_off[j] = it->second.first;
          win_size[j] = it->second.second;
        }
        win_start[j] = width;
        width += win_size[j];
      }

      RowSpan span(width, /*track=*/true);
      std::vector<int> accepted;
      for (auto [i, u] : cands) {
        // w = f_i u;  e_j w = f_i (e_j u) + [i == j] <wt(u), alpha_i^vee> u
        std::vector<SparseVec> ejw(n);
        QVec sig(width, Rat(0));
        for (int j = 0; j < n; ++j) {
          std::map<int, Rat> acc;
          for (const auto& [k, c] : ecol[j][u])
            for (const auto& [l, d] : fcol[i][k]) acc[l] += c * d;
          if (i == j) acc[u] += vweight[u].fund_coords[i];
          for (const auto& [l, c] : acc) {
            if (c == 0) continue;
            ejw[j].emplace_back(l, c);
            int local = l - win_off[j];
            assert(win_off[j] >= 0 && local >= 0 && local < win_size[j]);
            sig[win_start[j] + local] = c;
          }
        }

        auto res = span.insert(std::move(sig));
        if (res.added) {
          int id = int(vweight.size());
          vweight.push_back(mu);
          accepted.push_back(id);
          next_level.push_back(id);
          fcol[i][u] = {{id, Rat(1)}};
          for (int j = 0; j < n; ++j) ecol[j].push_back(ejw[j]);
        } else {
          SparseVec expr;
          for (size_t k = 0; k < res.coords.size(); ++k)
            if (res.coords[k] != 0) expr.emplace_back(accepted[k], res.coords[k]);
          fcol[i][u] = std::move(expr);
        }
      }
      if (!accepted.empty()) block_of[rc] = {accepted.front(), int(accepted.size())};
    }
    level = std::move(next_level);
  }

  m.dim_ = int(vweight.size());
  assert(Int(m.dim_) == wdim);
  m.basis_weight_ = std::move(vweight);

  // weight blocks (contiguous by construction: one weight appears in one level
  // and groups are processed weight-sorted within a level)
  for (int i = 0; i < m.dim_;) {
    int j = i;
    while (j < m.dim_ && m.basis_weight_[j] == m.basis_weight_[i]) ++j;
    m.blocks_.push_back({m.basis_weight_[i], i, j - i});
    i = j;
  }

  for (int i = 0; i < n; ++i) {
    QMat E(m.dim_, m.dim_), F(m.dim_, m.dim_);
    for (int col = 0; col < m.dim_; ++col)
      for (const auto& [r, c] : ecol[i][col]) E.at(r, col) = c;
    for (int col = 0; col < int(fcol[i].size()); ++col)
      for (const auto& [r, c] : fcol[i][col]) F.at(r, col) = c;
    m.e_.push_back(std::move(E));
    m.f_.push_back(std::move(F));
  }
  return m;
}

Int IrrModule::multiplicity(const Weight& w) const {
  for (const auto& b : blocks_)
    if (b.weight == w) return b.size;
  return 0;
}

QVec IrrModule::h_diag(int i) const {
  QVec d(dim_);
  for (int k = 0; k < dim_; ++k) d[k] = basis_weight_[k].fund_coords[i];
  return d;
}

QMat IrrModule::root_action(int root_idx) const {
  const RootSystem& rs = roots();
  const Root& gamma = rs.root(root_idx);
  if (gamma.height() == 1) {
    for (int i = 0; i < rs.rank(); ++i)
      if (gamma.coords[i] == 1) return e_[i];
  }
  if (gamma.height() == -1) {
    for (int i = 0; i < rs.rank(); ++i)
      if (gamma.coords[i] == -1) return f_[i];
  }
  // fixed bracketing: gamma = alpha + (gamma - alpha), alpha the first simple
  // root keeping gamma - alpha a root; rho(e_gamma) = [rho a, rho rest]/N
  const bool pos = gamma.positive();
  for (int i = 0; i < rs.rank(); ++i) {
    std::vector<int> rest = gamma.coords;
    int alpha_idx = rs.simple_root_index(i);
    if (pos)
      rest[i] -= 1;
    else {
      rest[i] += 1;
      alpha_idx = rs.negative_of(alpha_idx);
    }
    int rest_idx = rs.root_index(rest);
    if (rest_idx < 0) continue;
    Rat nconst = g_->structure_constant(alpha_idx, rest_idx);
    QMat a = root_action(alpha_idx);
    QMat b = root_action(rest_idx);
    return (a * b - b * a).scaled(1 / nconst);
  }
  throw std::logic_error("root_action: no simple-root decomposition found");
}

QMat IrrModule::act(const LieElement& x) const {
  if (x.alg != g_) throw std::invalid_argument("act: element over a different algebra");
  QMat out(dim_, dim_);
  for (const auto& [idx, c] : x.terms) {
    if (g_->is_root_vector(idx)) {
      out = out + root_action(idx).scaled(c);
    } else {
      int i = idx - roots().num_roots();
      for (int k = 0; k < dim_; ++k) out.at(k, k) += c * basis_weight_[k].fund_coords[i];
    }
  }
  return out;
}

Subspace IrrModule::invariants(const std::vector<LieElement>& gens) const {
  std::vector<QMat> mats;
  for (const auto& x : gens) mats.push_back(act(x));
  Subspace s;
  s.ambient = dim_;
  s.basis = joint_kernel(mats, dim_);
  return s;
}

ModuleGrading IrrModule::type_grading(const std::vector<int>& pi_prime) const {
  ModuleGrading grading;
  for (int k = 0; k < dim_; ++k)
    grading.pieces[roots().pi_height(pi_prime, basis_weight_[k])].push_back(k);
  return grading;
}

std::vector<Weight> sample_dominant_weights(const RootSystem& rs, int count, long dim_cap,
                                            unsigned long long seed, int coord_bound) {
  std::mt19937_64 rng(seed);
  std::vector<Weight> out;
  int guard = 0;
  while (int(out.size()) < count && guard < 100000) {
    ++guard;
    QVec fc(rs.rank());
    bool nonzero = false;
    for (int i = 0; i < rs.rank(); ++i) {
      long v = long(rng() % (unsigned long long)(coord_bound + 1));
      fc[i] = v;
      if (v) nonzero = true;
    }
    if (!nonzero) continue;
    Weight w = rs.weight_from_fund_coords(fc);
    if (weyl_dim(rs, w) <= dim_cap) out.push_back(w);
  }
  if (int(out.size()) < count)
    throw std::runtime_error("sample_dominant_weights: sampling budget exhausted");
  return out;
}

}  // namespace lieq
