#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieq/linalg.hpp"
#include "lieq/rational.hpp"

namespace lieq {

struct TypeRank {
  char letter;  // 'A'..'G'
  int rank;
};

/// Root in the simple-root integer basis. Coordinates are sign-homogeneous:
/// all >= 0 or all <= 0.
struct Root {
  std::vector<int> coords;

  int height() const;
  bool positive() const { return height() > 0; }
  bool operator==(const Root& o) const { return coords == o.coords; }
};

/// Weight carrying both coordinatizations, kept in sync:
/// root_coords = b_alpha over the simple roots, fund_coords = <nu, alpha_i^vee>.
struct Weight {
  QVec root_coords;
  QVec fund_coords;

  bool operator==(const Weight& o) const { return root_coords == o.root_coords; }
  bool operator<(const Weight& o) const { return root_coords < o.root_coords; }
  bool is_zero() const { return is_zero_vec(root_coords); }
  bool is_integral() const;  // all fund_coords integers (weight lattice P)
  bool in_root_lattice() const;  // all root_coords integers (lattice Q)
  bool is_dominant() const;
};

/// Root system of a semisimple type: exact Cartan data, the full root list,
/// fundamental weights, and the symmetrized inner product with (a,a) = 2 for
/// short roots. Immutable after construction; Bourbaki numbering throughout.
class RootSystem {
 public:
  static RootSystem build(const std::vector<TypeRank>& components);
  static std::vector<TypeRank> parse_type(const std::string& s);  // "A2+A1"

  int rank() const { return rank_; }
  const std::vector<TypeRank>& components() const { return components_; }
  std::string type_string() const;
  bool is_simple() const { return components_.size() == 1; }

  int num_positive() const { return num_positive_; }
  int num_roots() const { return int(all_roots_.size()); }
  const std::vector<Root>& all_roots() const { return all_roots_; }
  const Root& root(int idx) const { return all_roots_[idx]; }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<std::vector<Rat>>& inverse_cartan() const { return inverse_cartan_; }
  const std::vector<std::vector<Rat>>& sym() const { return sym_; }
  const std::vector<Weight>& fund_weights() const { return fund_weights_; }
  const Int& index_of_connection() const { return index_of_connection_; }
  int norm_numerator(int i) const { return d_[i]; }  // (alpha_i, alpha_i)/2

  int root_index(const std::vector<int>& coords) const;  // -1 if not a root
  int negative_of(int idx) const;
  int sum_index(int i, int j) const;  // index of root_i + root_j, or -1
  int simple_root_index(int i) const;  // index of alpha_i (0-based i)
  bool is_simple_root(int idx) const { return root(idx).height() == 1; }

  Weight weight_from_root_coords(QVec rc) const;
  Weight weight_from_fund_coords(QVec fc) const;
  Weight weight_of_root(int idx) const;
  Weight zero_weight() const;
  Weight rho() const;  // half sum of positive roots = sum of fund weights

  Rat inner(const Weight& a, const Weight& b) const;
  Rat inner_root_weight(int root_idx, const Weight& w) const;
  Rat coroot_pairing(int root_idx, const Weight& w) const;  // <w, gamma^vee>

  /// Pi'-height: sum of the root coordinates of w over the chosen subset
  /// of simple roots (0-based indices).
  Rat pi_height(const std::vector<int>& pi_prime, const Weight& w) const;
  int pi_height_root(const std::vector<int>& pi_prime, int root_idx) const;

  /// Unique 2-coloring of the Dynkin forest; the part holding the smallest
  /// simple root of each component comes first.
  std::pair<std::vector<int>, std::vector<int>> dynkin_bipartition() const;

  int num_components() const { return int(components_.size()); }
  int component_of_simple(int i) const { return comp_of_simple_[i]; }
  int component_of_root(int idx) const;

  /// Highest root of a simple system (maximal height).
  int highest_root_index() const;

  /// Reflect w in the hyperplane of simple root i.
  Weight simple_reflection(int i, const Weight& w) const;
  /// Dominant representative of the Weyl orbit of w.
  Weight dominant_representative(const Weight& w) const;

 private:
  RootSystem() = default;

  std::vector<TypeRank> components_;
  int rank_ = 0;
  int num_positive_ = 0;
  std::vector<Root> all_roots_;  // positives by (height, lex), then negatives
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rat>> inverse_cartan_;
  std::vector<std::vector<Rat>> sym_;
  std::vector<int> d_;  // (alpha_i, alpha_i)/2
  std::vector<Weight> fund_weights_;
  Int index_of_connection_;
  std::map<std::vector<int>, int> root_lookup_;
  std::vector<std::vector<int>> sum_table_;
  std::vector<int> comp_of_simple_;
};

}  // namespace lieq
