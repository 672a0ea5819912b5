#pragma once

#include <vector>

#include "homcolim/matrix.hpp"

namespace homcolim {

// Smith normal form of an integer matrix: U * M * V = D with U, V unimodular
// and D diagonal, each invariant factor positive and dividing the next.
struct SnfResult {
  std::vector<Int> invariant_factors;  // nonzero diagonal of D
  ZMat u, v;
  ZMat v_inv;  // inverse of V, needed to express vectors in the kernel basis
};

SnfResult snf(const ZMat& m);

}  // namespace homcolim
