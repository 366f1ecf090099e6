#include "lieq/atlas.hpp"

#include <algorithm>
#include <cassert>

namespace lieq {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Json Report::to_json() const {
  Json j;
  j["scenario"] = scenario;
  j["inputs"] = inputs;
  j["pass"] = all_pass();
  j["checks"] = Json::array();
  for (const auto& c : checks) {
    Json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (!c.data.is_null()) jc["data"] = c.data;
    j["checks"].push_back(jc);
  }
  return j;
}

// ---------------------------------------------------------------------------
// serialization

Json weight_json(const Weight& w) {
  Json j;
  Json rc = Json::array(), fc = Json::array();
  for (const auto& x : w.root_coords) rc.push_back(to_string(x));
  for (const auto& x : w.fund_coords) fc.push_back(to_string(x));
  j["root_coords"] = rc;
  j["fund_coords"] = fc;
  return j;
}

Json rootsys_json(const RootSystem& rs) {
  Json j;
  j["type"] = rs.type_string();
  j["rank"] = rs.rank();
  j["num_roots"] = rs.num_roots();
  j["index_of_connection"] = to_string(rs.index_of_connection());
  j["cartan"] = Json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < rs.rank(); ++k) row.push_back(rs.cartan()[i][k]);
    j["cartan"].push_back(row);
  }
  j["inverse_cartan"] = Json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < rs.rank(); ++k) row.push_back(to_string(rs.inverse_cartan()[i][k]));
    j["inverse_cartan"].push_back(row);
  }
  j["positive_roots"] = Json::array();
  for (int i = 0; i < rs.num_positive(); ++i) j["positive_roots"].push_back(rs.root(i).coords);
  j["fundamental_weights"] = Json::array();
  for (const auto& w : rs.fund_weights()) {
    Json rc = Json::array();
    for (const auto& x : w.root_coords) rc.push_back(to_string(x));
    j["fundamental_weights"].push_back(rc);
  }
  return j;
}

Json chevalley_json(const ChevalleyAlgebra& g) {
  const RootSystem& rs = g.roots();
  Json j;
  j["type"] = rs.type_string();
  j["dim"] = g.dim();
  Json basis = Json::array();
  for (int i = 0; i < rs.num_roots(); ++i) {
    Json b;
    b["kind"] = "root";
    b["coords"] = rs.root(i).coords;
    basis.push_back(b);
  }
  for (int i = 0; i < rs.rank(); ++i) {
    Json b;
    b["kind"] = "cartan";
    b["index"] = i + 1;
    basis.push_back(b);
  }
  j["basis"] = basis;
  Json brackets = Json::array();
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a + 1; b < g.dim(); ++b) {
      const auto& entry = g.bracket_basis(a, b);
      if (entry.empty()) continue;
      Json e;
      e["i"] = a;
      e["j"] = b;
      Json terms = Json::array();
      for (const auto& [k, c] : entry) terms.push_back({k, to_string(c)});
      e["terms"] = terms;
      brackets.push_back(e);
    }
  j["brackets"] = brackets;
  return j;
}

Json census_record_json(const CensusRecord& rec) {
  Json j;
  Json roots = Json::array();
  for (int idx : rec.subset.indices()) roots.push_back(rec.subset.rs->root(idx).coords);
  j["roots"] = roots;
  j["closed"] = true;
  j["wide"] = rec.wide;
  j["size"] = rec.size;
  j["abelian"] = rec.abelian;
  j["family_tags"] = rec.family_tags;
  if (!rec.wide) {
    Json w = Json::array();
    for (int idx : rec.witness.indices()) w.push_back(rec.witness.rs->root(idx).coords);
    j["witness"] = w;
  }
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j;
  switch (v.decision) {
    case Verdict::Decision::indecomposable:
      j["decision"] = "indecomposable";
      break;
    case Verdict::Decision::decomposable:
      j["decision"] = "decomposable";
      break;
    case Verdict::Decision::undetermined_over_base_field:
      j["decision"] = "undetermined_over_base_field";
      break;
  }
  j["certificate_kind"] = v.certificate_kind;
  j["algebra_dim"] = v.algebra_dim;
  j["radical_dim"] = v.radical_dim;
  if (!v.note.empty()) j["note"] = v.note;
  if (v.projector.rows() > 0) {
    Json p = Json::array();
    for (int r = 0; r < v.projector.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < v.projector.cols(); ++c) row.push_back(to_string(v.projector.at(r, c)));
      p.push_back(row);
    }
    j["projector"] = p;
    j["projector_rank"] = rank_of(v.projector);
  }
  return j;
}

// ---------------------------------------------------------------------------
// module panel

std::vector<Weight> module_panel(const RootSystem& rs) {
  std::vector<Weight> panel;
  Weight adjoint = rs.weight_of_root(rs.highest_root_index());
  panel.push_back(adjoint);
  panel.push_back(rs.fund_weights()[0]);

  // smallest non-fundamental dominant weight distinct from the adjoint
  const int n = rs.rank();
  std::vector<int> box(n, 2);
  std::vector<Weight> candidates;
  std::vector<int> cur(n, 0);
  for (;;) {
    int total = 0, nonzero = 0;
    for (int i = 0; i < n; ++i) {
      total += cur[i];
      if (cur[i]) ++nonzero;
    }
    bool fundamental = (total == 1);
    if (total > 0 && !fundamental) {
      QVec fc(n);
      for (int i = 0; i < n; ++i) fc[i] = cur[i];
      Weight w = rs.weight_from_fund_coords(fc);
      if (!(w == adjoint)) candidates.push_back(w);
    }
    int i = 0;
    while (i < n && cur[i] == box[i]) cur[i++] = 0;
    if (i == n) break;
    ++cur[i];
  }
  auto best = std::min_element(candidates.begin(), candidates.end(),
                               [&](const Weight& a, const Weight& b) {
                                 Int da = weyl_dim(rs, a), db = weyl_dim(rs, b);
                                 if (da != db) return da < db;
                                 return a.fund_coords < b.fund_coords;
                               });
  panel.push_back(*best);
  return panel;
}

// ---------------------------------------------------------------------------
// scenario: e3 in sl4 / sp4

namespace {

QMat mat4(std::initializer_list<std::initializer_list<int>> rows) {
  QMat m(4, 4);
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (int x : row) m.at(r, c++) = x;
    ++r;
  }
  return m;
}

// [[A, B], [0, A]] for 2x2 blocks A, B
QMat block_embed(const QMat& a, const QMat& b) {
  QMat m(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m.at(i, j) = a.at(i, j);
      m.at(2 + i, 2 + j) = a.at(i, j);
      m.at(i, 2 + j) = b.at(i, j);
    }
  return m;
}

}  // namespace

Report scenario_e3(int max_m, long dim_cap) {
  Report rep;
  rep.scenario = "e3";
  rep.inputs = Json{{"max_m", max_m}, {"dim_cap", dim_cap}};

  RootSystem a3 = RootSystem::build({{'A', 3}});
  ChevalleyAlgebra sl4 = ChevalleyAlgebra::build(a3);
  IrrModule defining = IrrModule::build(sl4, a3.fund_weights()[0], dim_cap);
  assert(defining.dim() == 4);

  // sl2 basis and the six generators of the block subalgebra
  QMat x2(2, 2), h2(2, 2), y2(2, 2);
  x2.at(0, 1) = 1;
  h2.at(0, 0) = 1;
  h2.at(1, 1) = -1;
  y2.at(1, 0) = 1;
  QMat zero2(2, 2);
  std::vector<QMat> gen_mats = {
      block_embed(x2, zero2), block_embed(h2, zero2), block_embed(y2, zero2),
      block_embed(zero2, x2), block_embed(zero2, h2), block_embed(zero2, y2)};

  // coordinates in the Chevalley basis, through the defining representation
  QMat basis_flat(16, sl4.dim());
  for (int b = 0; b < sl4.dim(); ++b) {
    QVec unit(sl4.dim(), Rat(0));
    unit[b] = 1;
    QVec v = defining.act(sl4.element(unit)).flatten();
    for (int r = 0; r < 16; ++r) basis_flat.at(r, b) = v[r];
  }
  std::vector<LieElement> gens;
  {
    bool ok = true;
    for (const auto& gm : gen_mats) {
      auto coords = solve(basis_flat, gm.flatten());
      if (!coords) {
        ok = false;
        break;
      }
      LieElement x = sl4.element(*coords);
      if (!(defining.act(x) == gm)) ok = false;
      gens.push_back(x);
    }
    rep.checks.push_back({"e3-generators-in-sl4", ok, Json{{"count", int(gens.size())}}});
  }

  // (a) e3 respects the symplectic form: Psi g + g^T Psi = 0
  {
    QMat psi = mat4({{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}});
    bool ok = true;
    for (const auto& gm : gen_mats)
      if (!(psi * gm + gm.transpose() * psi).is_zero()) ok = false;
    rep.checks.push_back({"e3-inside-sp4", ok, Json()});
  }

  // (b) block structure: the B-part is an abelian ideal under the A-part,
  // and matches the nilradical p(2)_nil of sp4 (3-dimensional, wide)
  {
    bool ok = true;
    for (int i = 3; i < 6; ++i)
      for (int j = 3; j < 6; ++j)
        if (!sl4.bracket(gens[i], gens[j]).is_zero()) ok = false;
    RowSpan bspan(sl4.dim());
    for (int i = 3; i < 6; ++i) bspan.insert(gens[i].dense());
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j)
        if (!bspan.contains(sl4.bracket(gens[i], gens[j]).dense())) ok = false;
    if (int(sl4.generated_subalgebra(gens).size()) != 6) ok = false;

    RootSystem c2 = RootSystem::build({{'C', 2}});
    RootSubset p2nil = parabolic_nilradical_set(c2, {1});
    bool nil_wide = is_wide_criterion(p2nil).wide;
    ok = ok && p2nil.size() == 3 && nil_wide;
    rep.checks.push_back(
        {"e3-contains-p2-nilradical", ok,
         Json{{"p2_nil_size", p2nil.size()}, {"p2_nil_wide", nil_wide}}});
  }

  RootSystem c2 = RootSystem::build({{'C', 2}});
  auto sp4_dim = [&](const Weight& lam) {
    // branching weight: a1 w1 + a2 w2 + a3 w3 -> (a1+a3) w~1 + a2 w~2
    QVec fc = {lam.fund_coords[0] + lam.fund_coords[2], lam.fund_coords[1]};
    return weyl_dim(c2, c2.weight_from_fund_coords(fc));
  };

  // (c) indecomposable for m w1 and m w3
  for (int m = 1; m <= max_m; ++m) {
    for (int fund : {0, 2}) {
      QVec fc(3, Rat(0));
      fc[fund] = m;
      Weight lam = a3.weight_from_fund_coords(fc);
      Int want_dim = weyl_dim(a3, lam);
      IrrModule mod = IrrModule::build(sl4, lam, dim_cap);
      Verdict v = verdict(mod, gens);
      bool ok = v.decision == Verdict::Decision::indecomposable &&
                sp4_dim(lam) == want_dim && Int(mod.dim()) == want_dim;
      rep.checks.push_back({"e3-indecomposable-m" + std::to_string(m) + "-w" +
                                std::to_string(fund + 1),
                            ok,
                            Json{{"dim", mod.dim()}, {"verdict", verdict_json(v)["decision"]}}});
    }
  }

  // (d)+(e) decomposable trio, with the strict sp4-dimension drop
  {
    std::vector<QVec> lams = {{1, 0, 1}, {0, 1, 0}, {0, 2, 0}};
    std::vector<std::string> names = {"w1+w3", "w2", "2w2"};
    for (size_t t = 0; t < lams.size(); ++t) {
      QVec fc(3);
      for (int i = 0; i < 3; ++i) fc[i] = lams[t][i];
      Weight lam = a3.weight_from_fund_coords(fc);
      IrrModule mod = IrrModule::build(sl4, lam, dim_cap);
      Verdict v = verdict(mod, gens);
      bool ok = v.decision == Verdict::Decision::decomposable;
      Json data;
      data["dim"] = mod.dim();
      data["sp4_dim"] = to_string(sp4_dim(lam));
      ok = ok && sp4_dim(lam) < Int(mod.dim());
      if (ok) {
        const QMat& p = v.projector;
        int rk = rank_of(p);
        ok = p * p == p && rk > 0 && rk < mod.dim();
        for (const auto& x : gens)
          if (!(mod.act(x) * p == p * mod.act(x))) ok = false;
        data["piece_dims"] = Json::array({std::min(rk, mod.dim() - rk), std::max(rk, mod.dim() - rk)});
        if (names[t] == "w2") ok = ok && std::min(rk, mod.dim() - rk) == 1 && std::max(rk, mod.dim() - rk) == 5;
      }
      rep.checks.push_back({"e3-decomposable-" + names[t], ok, data});
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// scenario: families for one simple type

namespace {

std::string pi_name(const std::vector<int>& pi) {
  if (pi.empty()) return "{}";
  std::string s = "{";
  for (size_t i = 0; i < pi.size(); ++i) {
    if (i) s += ",";
    s += "a" + std::to_string(pi[i] + 1);
  }
  return s + "}";
}

// grading element sum of pi' fundamental coweights, as an element of t
LieElement pi_grading_element(const ChevalleyAlgebra& g, const std::vector<int>& pi_prime) {
  const RootSystem& rs = g.roots();
  LieElement h = g.zero();
  for (int j = 0; j < rs.rank(); ++j) {
    Rat c = 0;
    for (int i : pi_prime) c += rs.inverse_cartan()[j][i];
    if (c != 0) h += g.h(j, c);
  }
  return h;
}

}  // namespace

Report scenario_families(char type, int rank, long dim_cap, unsigned long long seed) {
  Report rep;
  rep.scenario = "families";
  rep.inputs = Json{{"type", std::string(1, type)}, {"rank", rank}, {"dim_cap", dim_cap},
                    {"seed", seed}};

  RootSystem rs = RootSystem::build({{type, rank}});
  if (rs.num_roots() > 24)
    throw std::invalid_argument("families: root count exceeds the guard (24)");
  ChevalleyAlgebra g = ChevalleyAlgebra::build(rs);

  std::vector<Weight> panel = module_panel(rs);
  std::vector<IrrModule> modules;
  std::vector<std::string> skipped;
  for (const auto& lam : panel) {
    if (weyl_dim(rs, lam) <= dim_cap)
      modules.push_back(IrrModule::build(g, lam, dim_cap));
    else {
      Json fc;
      skipped.push_back(to_string(weyl_dim(rs, lam)));
    }
  }
  Json panel_json = Json::array();
  for (size_t i = 0; i < modules.size(); ++i) panel_json.push_back(modules[i].dim());
  rep.inputs["panel_dims"] = panel_json;
  if (!skipped.empty()) rep.inputs["skipped_panel_dims"] = skipped;

  const int n = rs.rank();

  // parabolic nilradicals, every nonempty Pi'
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> pi;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) pi.push_back(i);
    RootSubset nil = parabolic_nilradical_set(rs, pi);
    WideVerdict crit = is_wide_criterion(nil);
    LieElement hgrad = pi_grading_element(g, pi);
    bool ok = crit.wide;
    Json data;
    data["criterion"] = crit.wide ? "wide" : "not-wide";
    for (const auto& mod : modules) {
      CentralizerAlgebra A = centralizer_algebra(mod, subset_generators(g, nil));
      GradingCertificate gc = grading_certificate(A, hgrad);
      MultigradingCertificate mc = multigrading_certificate(A, nil);
      Verdict vd = verdict_of(A);
      ok = ok && gc.success && mc.success &&
           vd.decision == Verdict::Decision::indecomposable;
    }
    rep.checks.push_back({"parabolic-nilradical-" + pi_name(pi), ok, data});
  }

  // Pi-partition subalgebras, every Pi'
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> pi;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) pi.push_back(i);
    RootSubset part = pi_partition_set(rs, pi);
    WideVerdict crit = is_wide_criterion(part);
    bool ok = crit.wide;
    Json data;
    data["size"] = part.size();
    data["abelian"] = part.is_abelian();
    for (const auto& mod : modules) {
      CentralizerAlgebra A = centralizer_algebra(mod, subset_generators(g, part));
      MultigradingCertificate mc = multigrading_certificate(A, part);
      Verdict vd = verdict_of(A);
      ok = ok && mc.success && vd.decision == Verdict::Decision::indecomposable;
    }
    rep.checks.push_back({"pi-partition-" + pi_name(pi), ok, data});
  }

  // derived algebra of u+
  {
    RootSubset der = derived_uplus_set(rs);
    WideVerdict crit = is_wide_criterion(der);
    bool expect_wide = !(type == 'A' && rank <= 2);
    bool ok = crit.wide == expect_wide;
    Json data;
    data["criterion"] = crit.wide ? "wide" : "not-wide";
    if (crit.wide) {
      for (const auto& mod : modules) {
        CentralizerAlgebra A = centralizer_algebra(mod, subset_generators(g, der));
        MultigradingCertificate mc = multigrading_certificate(A, der);
        Verdict vd = verdict_of(A);
        ok = ok && mc.success && vd.decision == Verdict::Decision::indecomposable;
      }
    } else if (!modules.empty()) {
      // adjoint module decomposes; the certificate must fail
      CentralizerAlgebra A = centralizer_algebra(modules[0], subset_generators(g, der));
      MultigradingCertificate mc = multigrading_certificate(A, der);
      Verdict vd = verdict_of(A);
      ok = ok && !mc.success && vd.decision == Verdict::Decision::decomposable;
      data["witness_size"] = crit.closure_sym.size();
    }
    rep.checks.push_back({"derived-uplus", ok, data});
  }

  // centralizer nilradicals of the principal and minimal nilpotents
  {
    struct Nil {
      std::string name;
      Sl2Triple t;
    };
    std::vector<Nil> nils;
    nils.push_back({"principal", principal_triple(g)});
    if (rank >= 2) nils.push_back({"minimal", jacobson_morozov(g, minimal_nilpotent(g))});
    for (const auto& nil : nils) {
      GradedSubspace znil = centralizer_nilradical(g, nil.t);
      std::vector<LieElement> gens;
      for (const auto& [deg, basis] : znil.pieces)
        for (const auto& x : basis) gens.push_back(x);
      bool ok = true;
      Json data;
      data["znil_dim"] = znil.total_dim();
      for (const auto& mod : modules) {
        CentralizerAlgebra A = centralizer_algebra(mod, gens);
        GradingCertificate gc = grading_certificate(A, nil.t.h);
        Verdict vd = verdict_of(A);
        ok = ok && gc.success && vd.decision == Verdict::Decision::indecomposable;
      }
      rep.checks.push_back({"centralizer-nilradical-" + nil.name, ok, data});
    }
  }
  (void)seed;
  return rep;
}

}  // namespace lieq
