#pragma once

#include <json.hpp>

#include "lieq/indecomp.hpp"
#include "lieq/sl2.hpp"

namespace lieq {

using Json = nlohmann::ordered_json;

struct CheckResult {
  std::string name;
  bool pass = false;
  Json data;
};

struct Report {
  std::string scenario;
  Json inputs;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  Json to_json() const;
};

/// The euclidean-algebra scenario: the 6-generator subalgebra of sl4 in block
/// form, its containment in sp4, and the indecomposability pattern of the
/// simple sl4-modules over it.
Report scenario_e3(int max_m = 3, long dim_cap = 3000);

/// Family sweep for one simple type: parabolic nilradicals, Pi-partition
/// subalgebras, the derived algebra of u+, and the centralizer nilradicals of
/// the principal and minimal nilpotents, each checked on the module panel by
/// criterion, grading certificates, and the idempotent verdict.
Report scenario_families(char type, int rank, long dim_cap = 3000,
                         unsigned long long seed = 0);

/// Module panel: adjoint, R(w1), and the smallest non-fundamental highest
/// weight distinct from the adjoint (ties broken by fundamental coordinates).
std::vector<Weight> module_panel(const RootSystem& rs);

Json rootsys_json(const RootSystem& rs);
Json chevalley_json(const ChevalleyAlgebra& g);
Json census_record_json(const CensusRecord& rec);
Json verdict_json(const Verdict& v);
Json weight_json(const Weight& w);

}  // namespace lieq
