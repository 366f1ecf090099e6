#pragma once

#include <utility>
#include <vector>

#include "lieq/linalg.hpp"
#include "lieq/rootsys.hpp"

namespace lieq {

class ChevalleyAlgebra;

/// Element of the Lie algebra in the Chevalley basis {e_gamma, h_i}.
/// Canonical sparse form: terms sorted by basis index, no zero coefficients.
struct LieElement {
  const ChevalleyAlgebra* alg = nullptr;
  std::vector<std::pair<int, Rat>> terms;

  bool is_zero() const { return terms.empty(); }
  QVec dense() const;
  LieElement& operator+=(const LieElement& o);
  LieElement operator+(const LieElement& o) const;
  LieElement operator-() const;
  LieElement scaled(const Rat& c) const;
  bool operator==(const LieElement& o) const;
};

/// The semisimple Lie algebra over Q presented by its Chevalley structure
/// constants. Basis order: root vectors e_gamma in the all_roots order,
/// then the coroots h_1..h_n. Signs are fixed by Carter's extraspecial-pair
/// convention with the (height, lex) total order on positive roots.
class ChevalleyAlgebra {
 public:
  static ChevalleyAlgebra build(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  int dim() const { return dim_; }
  int rank() const { return rs_.rank(); }

  int root_vector_index(int root_idx) const { return root_idx; }
  int cartan_index(int i) const { return rs_.num_roots() + i; }
  bool is_root_vector(int basis_idx) const { return basis_idx < rs_.num_roots(); }

  LieElement e(int root_idx, Rat c = Rat(1)) const;       // c * e_gamma
  LieElement h(int i, Rat c = Rat(1)) const;              // c * h_{alpha_i}
  LieElement element(const QVec& dense) const;            // from dense coords
  LieElement zero() const { return LieElement{this, {}}; }

  /// Bracket of basis elements, as a sparse coefficient list.
  const std::vector<std::pair<int, Rat>>& bracket_basis(int i, int j) const {
    return table_[size_t(i) * dim_ + j];
  }

  LieElement bracket(const LieElement& x, const LieElement& y) const;
  QMat ad_matrix(const LieElement& x) const;

  /// Structure constant N(a,b) with [e_a, e_b] = N e_{a+b}; roots given by
  /// index into all_roots. Zero when a+b is not a root.
  Rat structure_constant(int a, int b) const;

  /// Coroot gamma^vee expanded over h_1..h_n (integer coefficients).
  QVec coroot_coords(int root_idx) const;

  /// Exact basis of the Lie subalgebra generated by gens (left-normed
  /// closure: each round brackets the current span against gens only).
  std::vector<LieElement> generated_subalgebra(const std::vector<LieElement>& gens) const;

  /// Kernel of ad x.
  std::vector<LieElement> centralizer_in_g(const LieElement& x) const;

  Rat killing(const LieElement& x, const LieElement& y) const;

  bool is_nilpotent(const LieElement& x) const;

  /// e has nonzero projection to every simple component.
  bool is_nondegenerate(const LieElement& x) const;

 private:
  explicit ChevalleyAlgebra(RootSystem rs) : rs_(std::move(rs)) {}

  RootSystem rs_;
  int dim_ = 0;
  std::vector<std::vector<std::pair<int, Rat>>> table_;
};

}  // namespace lieq
