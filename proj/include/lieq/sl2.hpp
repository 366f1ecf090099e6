#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lieq/chevalley.hpp"

namespace lieq {

struct Sl2Triple {
  LieElement e, h, f;
};

/// Graded chunk of g: ad-h eigenvalue -> basis of the eigenspace piece.
struct GradedSubspace {
  std::map<Rat, std::vector<LieElement>> pieces;

  int total_dim() const;
  int dim_at(const Rat& degree) const;
};

/// Embeds a nonzero nilpotent e into an sl2-triple: h is solved inside
/// im(ad e) from (ad e)^2 y = -2e, then f from ad e(f) = h projected onto the
/// (-2)-eigenspace of ad h. Deterministic for fixed e.
Sl2Triple jacobson_morozov(const ChevalleyAlgebra& g, const LieElement& e);

/// The principal triple: e = sum of simple root vectors, h in t with
/// alpha_i(h) = 2 for all i.
Sl2Triple principal_triple(const ChevalleyAlgebra& g);

LieElement minimal_nilpotent(const ChevalleyAlgebra& g);  // e_theta, simple g

/// Eigenvalues of ad h on g (h must act split-semisimply).
std::map<Rat, int> ad_eigen_dims(const ChevalleyAlgebra& g, const LieElement& h);

/// ad-h eigen decomposition of the span of the given elements; the span must
/// be ad h stable.
GradedSubspace grade_by_ad(const ChevalleyAlgebra& g, const LieElement& h,
                           const std::vector<LieElement>& space);

/// z(e)_nil: the positive-degree part of z(e) under the h-grading.
GradedSubspace centralizer_nilradical(const ChevalleyAlgebra& g, const Sl2Triple& t);

/// The two-dimensional commutative wide pair (e, e~): e principal, e~ the
/// lowest-degree h-eigenvector of z(e) such that {e,h,f,e~} generates g
/// (ties broken by basis order; falls back to exhausting all eigenvectors).
std::pair<LieElement, LieElement> two_dim_wide_pair(const ChevalleyAlgebra& g);

}  // namespace lieq
