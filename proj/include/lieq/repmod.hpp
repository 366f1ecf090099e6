#pragma once

#include <map>
#include <vector>

#include "lieq/chevalley.hpp"

namespace lieq {

/// Weyl dimension formula: prod_{gamma>0} (lambda+rho, gamma)/(rho, gamma).
/// lambda must be dominant integral.
Int weyl_dim(const RootSystem& rs, const Weight& lambda);

struct WeightMult {
  Weight weight;
  Int mult;
};

/// All weights of R(lambda) with multiplicities (Freudenthal recursion,
/// Weyl-orbit expansion). Sorted by root coordinates.
std::vector<WeightMult> freudenthal(const RootSystem& rs, const Weight& lambda);

/// Subspace of Q^ambient; basis rows in reduced echelon form.
struct Subspace {
  int ambient = 0;
  QMat basis;

  int dim() const { return basis.rows(); }
};

/// Grading of a module by Pi'-height of the weights.
struct ModuleGrading {
  std::map<Rat, std::vector<int>> pieces;  // degree -> basis indices

  Rat top_degree() const;
  int dim_at(const Rat& d) const;
};

/// Simple highest-weight module R(lambda) with exact matrices of the
/// Chevalley generators on a weight basis. Built by lowering from the
/// highest-weight vector; linear dependence at each level is decided through
/// the raising-operator image (injective below the top), so the construction
/// needs no contravariant form. Immutable once built.
class IrrModule {
 public:
  struct Block {
    Weight weight;
    int offset;
    int size;
  };

  static IrrModule build(const ChevalleyAlgebra& g, const Weight& lambda, long dim_cap = 3000);

  const ChevalleyAlgebra& algebra() const { return *g_; }
  const RootSystem& roots() const { return g_->roots(); }
  const Weight& highest_weight() const { return lambda_; }
  int dim() const { return dim_; }

  const std::vector<Block>& blocks() const { return blocks_; }
  const Weight& weight_of(int basis_idx) const { return basis_weight_[basis_idx]; }
  Int multiplicity(const Weight& w) const;

  const QMat& gen_e(int i) const { return e_[i]; }
  const QMat& gen_f(int i) const { return f_[i]; }
  QVec h_diag(int i) const;

  /// rho(x) for any Lie element; root vectors beyond the simple ones come
  /// from the fixed bracketing gamma = alpha + (gamma - alpha), alpha the
  /// first simple root keeping gamma - alpha a root.
  QMat act(const LieElement& x) const;
  QMat root_action(int root_idx) const;

  /// Joint kernel of the action of gens.
  Subspace invariants(const std::vector<LieElement>& gens) const;

  ModuleGrading type_grading(const std::vector<int>& pi_prime) const;

 private:
  IrrModule() = default;

  const ChevalleyAlgebra* g_ = nullptr;
  Weight lambda_;
  int dim_ = 0;
  std::vector<Block> blocks_;
  std::vector<Weight> basis_weight_;
  std::vector<QMat> e_, f_;
};

/// Deterministic sampler: dominant integral weights with 0 < weyl_dim <= cap.
std::vector<Weight> sample_dominant_weights(const RootSystem& rs, int count, long dim_cap,
                                            unsigned long long seed, int coord_bound = 4);

}  // namespace lieq
