#pragma once

#include "homcolim/chain_complex.hpp"
#include "homcolim/freegraded.hpp"
#include "homcolim/struct_algebra.hpp"

namespace homcolim {

// Basis bookkeeping for Ā = A/k·1 of a unital algebra: the coordinate
// complement of the unit's leading index, with a section lifting Ā basis
// vectors back to A.
struct AbarBasis {
  explicit AbarBasis(const StructAlgebra& a);

  const StructAlgebra* alg;
  int pivot;                // leading index of the normalized unit
  std::vector<int> idx;     // A-basis indices forming the Ā basis
  QVec unit;                // unit normalized to leading coefficient 1

  int dim() const { return static_cast<int>(idx.size()); }
  int weight(int abar_index) const { return alg->weights[idx[abar_index]]; }
  QVec project(const QVec& v) const;     // A coords -> Ā coords
  QVec lift(int abar_index) const { return QVec::unit(idx[abar_index]); }
};

// Normalized Hochschild complex C_n = M ⊗ Ā^{⊗n} through degree
// max_degree+1. weight < 0 means ungraded (full complex); otherwise the
// algebra and module must be graded and only the total-weight-w part is
// built.
ChainComplexQ hochschild_complex(const StructAlgebra& a, const Bimodule& m,
                                 int max_degree, int weight = -1);

std::vector<HomologyClassSpace> hochschild(const StructAlgebra& a, const Bimodule& m,
                                           int max_degree, int weight = -1);

// dim H_1(A,M) as ker(α_M : Ω(A)⊗_{A^e} M → M), α_M(a⊗b⊗m) = b·m·a.
int h1_via_omega(const StructAlgebra& a, const Bimodule& m);

// Per weight w <= w_max: dim H_1(F_+, A_+⊗A_+)_w = dim (R/R²)_w, the
// graded Magnus-style identity for the presentation's relation module.
bool magnus_check(const GradedPresentation& p, int w_max);

}  // namespace homcolim
