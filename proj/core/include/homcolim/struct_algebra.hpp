#pragma once

#include "homcolim/graded_algebra.hpp"

namespace homcolim {

// Finite-dimensional algebra by structure constants e_i·e_j = Σ c_{ij}^k e_k.
// Optionally unital (unit as a vector) and optionally weight-graded (one
// weight per basis element; multiplication must respect the grading).
struct StructAlgebra {
  int dim = 0;
  std::vector<std::vector<QVec>> prod;   // prod[i][j] = e_i e_j
  bool unital = false;
  QVec unit;
  std::vector<int> weights;              // empty = ungraded

  bool graded() const { return !weights.empty(); }
  QVec mul_basis(int i, int j) const { return prod[i][j]; }
  QVec mul_vec(const QVec& x, const QVec& y) const;
  void validate() const;
};

// A_+ = k·1 ⊕ A with the unit as basis element 0; grading (if any) keeps
// the original weights and puts the unit in weight 0.
StructAlgebra unitalize(const StructAlgebra& a);

// Truncation of a graded algebra to weights <= W as a (non-unital) dense
// algebra; products above W are cut to zero, which does not affect any
// weight-homogeneous computation of total weight <= W.
StructAlgebra from_graded(const IGradedAlgebra& a, int truncation);

StructAlgebra ground_field();                 // ℚ
StructAlgebra dual_numbers();                 // ℚ[ε], ε² = 0
StructAlgebra product_of_fields();            // ℚ×ℚ componentwise
StructAlgebra zero_mult_algebra(int d);       // non-unital, all products 0

// A-bimodule by action matrices per algebra basis element.
struct Bimodule {
  const StructAlgebra* alg = nullptr;
  int dim = 0;
  std::vector<QMat> left;    // left[i] = action of e_i
  std::vector<QMat> right;   // right[i] = right action of e_i
  std::vector<int> weights;  // empty = ungraded

  QVec act_left(const QVec& a, const QVec& m) const;
  QVec act_right(const QVec& m, const QVec& a) const;
  void validate() const;
};

Bimodule regular_bimodule(const StructAlgebra& a);

// Ω(A) = ker(A⊗A → A) with actions a′(x⊗y)b′ = a′x ⊗ yb′; embedding maps
// the kernel basis into A⊗A (index convention i·dim+j for e_i⊗e_j).
struct OmegaResult {
  Bimodule bimodule;
  QMat embedding;
};

OmegaResult omega(const StructAlgebra& a);

}  // namespace homcolim
