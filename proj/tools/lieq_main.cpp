#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <string>

#include "lieq/atlas.hpp"

namespace {

using namespace lieq;

RootSystem build_system(const std::string& type, int rank) {
  if (type.size() == 1 && std::isalpha(type[0])) {
    if (rank <= 0) throw CLI::ValidationError("--rank", "rank required with a single type letter");
    return RootSystem::build({{char(std::toupper(type[0])), rank}});
  }
  return RootSystem::build(RootSystem::parse_type(type));
}

Rat parse_rat(const std::string& s) {
  Rat q(s);
  q.canonicalize();
  return q;
}

// element grammar: term (('+'|'-') term)*, term := [coeff '*'] (e|f|h) '[' k ']'
LieElement parse_element(const ChevalleyAlgebra& g, const std::string& spec) {
  LieElement out = g.zero();
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < spec.size() && std::isspace(spec[i])) ++i;
  };
  bool first = true;
  while (skip_ws(), i < spec.size()) {
    Rat sign = 1;
    if (spec[i] == '+' || spec[i] == '-') {
      if (spec[i] == '-') sign = -1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("element: expected '+' or '-' at position " + std::to_string(i));
    }
    first = false;
    skip_ws();
    Rat coeff = 1;
    size_t j = i;
    while (j < spec.size() && (std::isdigit(spec[j]) || spec[j] == '/')) ++j;
    if (j > i && j < spec.size() && spec[j] == '*') {
      coeff = parse_rat(spec.substr(i, j - i));
      i = j + 1;
      skip_ws();
    }
    if (i >= spec.size()) throw std::invalid_argument("element: dangling term");
    char kind = std::tolower(spec[i++]);
    if (kind != 'e' && kind != 'f' && kind != 'h')
      throw std::invalid_argument(std::string("element: unknown generator '") + kind + "'");
    skip_ws();
    if (i >= spec.size() || spec[i] != '[') throw std::invalid_argument("element: expected '['");
    ++i;
    size_t k = i;
    while (k < spec.size() && std::isdigit(spec[k])) ++k;
    if (k == i || k >= spec.size() || spec[k] != ']')
      throw std::invalid_argument("element: expected index and ']'");
    int idx = std::stoi(spec.substr(i, k - i));
    i = k + 1;
    const RootSystem& rs = g.roots();
    Rat c = sign * coeff;
    if (kind == 'h') {
      if (idx < 1 || idx > rs.rank()) throw std::invalid_argument("element: h index out of range");
      out += g.h(idx - 1, c);
    } else {
      if (idx < 1 || idx > rs.num_positive())
        throw std::invalid_argument("element: root index out of range");
      int root = idx - 1;
      if (kind == 'f') root = rs.negative_of(root);
      out += g.e(root, c);
    }
  }
  return out;
}

std::string element_string(const ChevalleyAlgebra& g, const LieElement& x) {
  if (x.is_zero()) return "0";
  const RootSystem& rs = g.roots();
  std::string s;
  for (const auto& [idx, c] : x.terms) {
    std::string name;
    if (g.is_root_vector(idx))
      name = idx < rs.num_positive() ? "e[" + std::to_string(idx + 1) + "]"
                                     : "f[" + std::to_string(idx - rs.num_positive() + 1) + "]";
    else
      name = "h[" + std::to_string(idx - rs.num_roots() + 1) + "]";
    std::string coeff = to_string(c);
    if (!s.empty() && coeff[0] != '-') s += "+";
    if (coeff == "1")
      s += name;
    else if (coeff == "-1")
      s += "-" + name;
    else
      s += coeff + "*" + name;
  }
  return s;
}

// root list grammar: token (',' token)*, token := '-'? ('a' k | '[' c,... ']')
std::vector<int> parse_roots(const RootSystem& rs, const std::string& spec) {
  std::vector<int> out;
  size_t i = 0;
  while (i < spec.size()) {
    while (i < spec.size() && (std::isspace(spec[i]) || spec[i] == ',')) ++i;
    if (i >= spec.size()) break;
    bool neg = false;
    if (spec[i] == '-') {
      neg = true;
      ++i;
    }
    int idx;
    if (std::tolower(spec[i]) == 'a') {
      ++i;
      size_t k = i;
      while (k < spec.size() && std::isdigit(spec[k])) ++k;
      int simple = std::stoi(spec.substr(i, k - i));
      if (simple < 1 || simple > rs.rank()) throw std::invalid_argument("roots: bad simple index");
      idx = rs.simple_root_index(simple - 1);
      i = k;
    } else if (spec[i] == '[') {
      ++i;
      std::vector<int> coords;
      while (i < spec.size() && spec[i] != ']') {
        size_t k = i;
        while (k < spec.size() && (std::isdigit(spec[k]) || spec[k] == '-')) ++k;
        coords.push_back(std::stoi(spec.substr(i, k - i)));
        i = k;
        while (i < spec.size() && (spec[i] == ',' || std::isspace(spec[i]))) ++i;
      }
      if (i >= spec.size()) throw std::invalid_argument("roots: unterminated '['");
      ++i;
      if (int(coords.size()) != rs.rank()) throw std::invalid_argument("roots: bad coord count");
      idx = rs.root_index(coords);
      if (idx < 0) throw std::invalid_argument("roots: not a root");
    } else {
      throw std::invalid_argument("roots: expected 'a<k>' or '[coords]'");
    }
    out.push_back(neg ? rs.negative_of(idx) : idx);
  }
  return out;
}

QVec parse_weight(const RootSystem& rs, const std::string& spec) {
  QVec fc;
  size_t i = 0;
  while (i < spec.size()) {
    while (i < spec.size() && (spec[i] == ',' || std::isspace(spec[i]))) ++i;
    if (i >= spec.size()) break;
    size_t k = i;
    while (k < spec.size() && spec[k] != ',') ++k;
    fc.push_back(parse_rat(spec.substr(i, k - i)));
    i = k;
  }
  if (int(fc.size()) != rs.rank())
    throw std::invalid_argument("weight: expected " + std::to_string(rs.rank()) + " coordinates");
  return fc;
}

int emit_report(const Report& rep, bool json, bool timings, double seconds) {
  if (json) {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks)
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                << (c.data.is_null() ? "" : "  " + c.data.dump()) << "\n";
    std::cout << (rep.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  if (timings) std::cerr << "wall time: " << seconds << " s\n";
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lieq: exact computational Lie theory toolkit"};
  app.require_subcommand(1);

  std::string type = "A";
  int rank = 0;
  bool json = false, timings = false;
  long dim_cap = 3000;
  unsigned long long seed = 0;
  app.add_flag("--json", json, "machine-readable JSON output");
  app.add_flag("--timings", timings, "print wall time to stderr");
  app.add_option("--dim-cap", dim_cap, "module dimension cap")->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized property checks")->capture_default_str();

  auto add_type_rank = [&](CLI::App* sub) {
    sub->add_option("--type,-t", type, "simple type letter (or compound like A2+A1)")->required();
    sub->add_option("--rank,-r", rank, "rank");
  };

  auto* c_rootsys = app.add_subcommand("rootsys", "construct a root system");
  add_type_rank(c_rootsys);
  bool dump_rootsys = false;
  c_rootsys->add_flag("--dump-rootsys", dump_rootsys, "full JSON dump");

  auto* c_chev = app.add_subcommand("chevalley", "structure constants of the Chevalley basis");
  add_type_rank(c_chev);
  bool dump_chev = false;
  c_chev->add_flag("--dump-chevalley", dump_chev, "full JSON dump of the bracket table");

  auto* c_census = app.add_subcommand("census", "enumerate closed subsets with G n -G empty");
  add_type_rank(c_census);
  long max_results = -1;
  c_census->add_option("--max-results", max_results, "stop after this many records");

  auto* c_sl2 = app.add_subcommand("sl2", "sl2-triple through a nilpotent element");
  add_type_rank(c_sl2);
  std::string element_spec = "e[1]";
  c_sl2->add_option("--element", element_spec, "nilpotent, e.g. \"e[1]+e[2]\"")->required();

  auto* c_irrep = app.add_subcommand("irrep", "simple highest-weight module");
  add_type_rank(c_irrep);
  std::string weight_spec;
  bool dump_irrep = false;
  c_irrep->add_option("--weight", weight_spec, "fundamental coordinates, e.g. 0,1,0")->required();
  c_irrep->add_flag("--dump", dump_irrep, "dump weights and multiplicities as JSON");

  auto* c_wide = app.add_subcommand("check-wide", "wideness criterion for a root subset");
  add_type_rank(c_wide);
  std::string roots_spec;
  c_wide->add_option("--roots", roots_spec, "roots, e.g. \"a1,-a2\" (closure is taken)")
      ->required();

  auto* c_e3 = app.add_subcommand("e3-suite", "the euclidean-subalgebra scenario in sl4");
  int max_m = 3;
  c_e3->add_option("--max-m", max_m, "largest multiple of w1/w3 to test")->capture_default_str();

  auto* c_fam = app.add_subcommand("families-suite", "family sweep for one simple type");
  add_type_rank(c_fam);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  try {
    if (c_rootsys->parsed()) {
      RootSystem rs = build_system(type, rank);
      if (dump_rootsys || json) {
        std::cout << rootsys_json(rs).dump(2) << "\n";
      } else {
        std::cout << "type " << rs.type_string() << ", rank " << rs.rank() << ", "
                  << rs.num_roots() << " roots, index of connection "
                  << to_string(rs.index_of_connection()) << "\n";
        auto [p1, p2] = rs.dynkin_bipartition();
        auto part = [](const std::vector<int>& p) {
          std::string s = "{";
          for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + ("a" + std::to_string(p[i] + 1));
          return s + "}";
        };
        std::cout << "bipartition " << part(p1) << " | " << part(p2) << "\n";
      }
      if (timings) std::cerr << "wall time: " << elapsed() << " s\n";
      return 0;
    }
    if (c_chev->parsed()) {
      RootSystem rs = build_system(type, rank);
      ChevalleyAlgebra g = ChevalleyAlgebra::build(rs);
      if (dump_chev || json) {
        std::cout << chevalley_json(g).dump(2) << "\n";
      } else {
        std::cout << "dim " << g.dim() << " (" << rs.num_roots() << " root vectors + rank "
                  << rs.rank() << ")\n";
      }
      if (timings) std::cerr << "wall time: " << elapsed() << " s\n";
      return 0;
    }
    if (c_census->parsed()) {
      RootSystem rs = build_system(type, rank);
      long count = 0;
      enumerate_census(rs, max_results, [&](const CensusRecord& rec) {
        std::cout << census_record_json(rec).dump() << "\n";
        ++count;
        return true;
      });
      std::cerr << count << " closed subsets\n";
      if (timings) std::cerr << "wall time: " << elapsed() << " s\n";
      return 0;
    }
    if (c_sl2->parsed()) {
      RootSystem rs = build_system(type, rank);
      ChevalleyAlgebra g = ChevalleyAlgebra::build(rs);
      LieElement e = parse_element(g, element_spec);
      Sl2Triple t = jacobson_morozov(g, e);
      GradedSubspace znil = centralizer_nilradical(g, t);
      auto dims = ad_eigen_dims(g, t.h);
      if (json) {
        Json j;
        j["e"] = element_string(g, t.e);
        j["h"] = element_string(g, t.h);
        j["f"] = element_string(g, t.f);
        Json grading = Json::array();
        for (const auto& [deg, d] : dims) grading.push_back({to_string(deg), d});
        j["grading_dims"] = grading;
        Json zn = Json::array();
        for (const auto& [deg, basis] : znil.pieces)
          for (const auto& x : basis) zn.push_back({to_string(deg), element_string(g, x)});
        j["znil"] = zn;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "e = " << element_string(g, t.e) << "\n";
        std::cout << "h = " << element_string(g, t.h) << "\n";
        std::cout << "f = " << element_string(g, t.f) << "\n";
        std::cout << "ad h eigenspace dims:";
        for (const auto& [deg, d] : dims) std::cout << " " << to_string(deg) << ":" << d;
        std::cout << "\nz(e)_nil (dim " << znil.total_dim() << "):\n";
        for (const auto& [deg, basis] : znil.pieces)
          for (const auto& x : basis)
            std::cout << "  degree " << to_string(deg) << ": " << element_string(g, x) << "\n";
      }
      if (timings) std::cerr << "wall time: " << elapsed() << " s\n";
      return 0;
    }
    if (c_irrep->parsed()) {
      RootSystem rs = build_system(type, rank);
      ChevalleyAlgebra g = ChevalleyAlgebra::build(rs);
      Weight lam = rs.weight_from_fund_coords(parse_weight(rs, weight_spec));
      Int wd = weyl_dim(rs, lam);
      auto mults = freudenthal(rs, lam);
      if (dump_irrep || json) {
        Json j;
        j["type"] = rs.type_string();
        j["highest_weight"] = weight_json(lam);
        j["dim"] = to_string(wd);
        Json w = Json::array();
        for (const auto& wm : mults) {
          Json e;
          e["weight"] = weight_json(wm.weight)["fund_coords"];
          e["mult"] = to_string(wm.mult);
          w.push_back(e);
        }
        j["weights"] = w;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "dim " << to_string(wd) << ", " << mults.size() << " weights\n";
      }
      if (timings) std::cerr << "wall time: " << elapsed() << " s\n";
      return 0;
    }
    if (c_wide->parsed()) {
      RootSystem rs = build_system(type, rank);
      RootSubset g0 = make_subset(rs, parse_roots(rs, roots_spec));
      RootSubset gamma = closure(g0);
      int bad;
      if (!gamma.disjoint_from_negative(&bad)) {
        std::cerr << "subset closure meets its negative: not ad-nilpotent\n";
        return 1;
      }
      WideVerdict v = is_wide_criterion(gamma);
      if (json) {
        Json j;
        j["wide"] = v.wide;
        Json roots = Json::array();
        for (int idx : gamma.indices()) roots.push_back(rs.root(idx).coords);
        j["subset"] = roots;
        if (!v.wide) {
          Json w = Json::array();
          for (int idx : v.closure_sym.indices()) w.push_back(rs.root(idx).coords);
          j["witness"] = w;
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (v.wide ? "wide" : "not wide") << " (subset size " << gamma.size() << ")\n";
        if (!v.wide)
          std::cout << "witness reductive root subset of size " << v.closure_sym.size() << "\n";
      }
      if (timings) std::cerr << "wall time: " << elapsed() << " s\n";
      return v.wide ? 0 : 1;
    }
    if (c_e3->parsed()) {
      Report rep = scenario_e3(max_m, dim_cap);
      return emit_report(rep, json, timings, elapsed());
    }
    if (c_fam->parsed()) {
      RootSystem rs = build_system(type, rank);
      if (!rs.is_simple()) throw std::invalid_argument("families-suite needs a simple type");
      Report rep = scenario_families(rs.components()[0].letter, rs.components()[0].rank, dim_cap,
                                     seed);
      return emit_report(rep, json, timings, elapsed());
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
