#pragma once

#include <optional>
#include <string>

#include "lieq/closedsets.hpp"
#include "lieq/repmod.hpp"

namespace lieq {

/// A = (End V)^h: the matrices commuting with the action of every generator.
/// When every generator is t-homogeneous (a single root vector, or inside t)
/// the basis is computed blockwise per t-weight and each basis element
/// carries its weight tag; this is the multigrading of the algebra.
struct CentralizerAlgebra {
  const IrrModule* module = nullptr;
  std::vector<LieElement> gens;
  int module_dim = 0;
  std::vector<QMat> basis;
  std::vector<std::optional<QVec>> weight_tag;  // root coords of the t-weight
  QVec identity_coords;
  RowSpan flat{0};  // flattened basis, for coordinate queries

  int dim() const { return int(basis.size()); }
  bool tagged() const;
  QMat from_coords(const QVec& c) const;
  std::optional<QVec> coords_of(const QMat& m) const;
  bool contains(const QMat& m) const;
};

CentralizerAlgebra centralizer_algebra(const IrrModule& m, const std::vector<LieElement>& gens);

/// Jacobson radical, as coordinate rows over the basis of A: kernel of the
/// trace form tr_V(xy) of the faithful module action (Dickson, char 0).
QMat radical(const CentralizerAlgebra& A);

struct Verdict {
  enum class Decision { indecomposable, decomposable, undetermined_over_base_field };

  Decision decision = Decision::undetermined_over_base_field;
  std::string certificate_kind;  // "local_algebra" | "idempotent" | "none"
  int algebra_dim = 0;
  int radical_dim = 0;
  QMat projector;  // idempotent certificate: P^2 = P, 0 < rank < dim V
  std::string note;
};

/// Decides h-decomposability of V through the idempotent structure of A:
/// dim(A/rad) = 1 gives indecomposable (local algebra); otherwise a splitting
/// element is searched (basis scan, center, seeded combinations, then the
/// central-splitting + Newton lift route through A/rad) and its minimal
/// polynomial split into coprime parts yields an exact projector.
Verdict verdict_of(const CentralizerAlgebra& A);
Verdict verdict(const IrrModule& m, const std::vector<LieElement>& gens);

struct GradingCertificate {
  bool success = false;
  std::string failure;
  std::map<Rat, int> grade_dims;  // eigenvalue of the grading action -> dim
};

/// N-grading certificate: decomposes A under the commutator action of the
/// grading element and verifies nonnegative integral grades with scalar
/// grade zero. Success proves indecomposability independently of the radical
/// computation. The grading element must normalize every generator
/// (ad-eigenvector condition), else the call is rejected.
GradingCertificate grading_certificate(const CentralizerAlgebra& A,
                                       const LieElement& grading_element);

struct MultigradingCertificate {
  bool success = false;
  std::string failure;
  bool strictly_convex = false;
  int zero_weight_dim = 0;
  std::vector<std::pair<QVec, int>> weight_dims;  // weight tag -> dim
};

/// Strictly-convex-cone certificate for a t-normalized subalgebra given by
/// its root subset: all weights of A lie in C(h), the cone is strictly
/// convex, and the zero-weight component is the scalars.
MultigradingCertificate multigrading_certificate(const CentralizerAlgebra& A,
                                                 const RootSubset& gamma);

/// {e_gamma : gamma in the subset}.
std::vector<LieElement> subset_generators(const ChevalleyAlgebra& g, const RootSubset& gamma);

}  // namespace lieq
