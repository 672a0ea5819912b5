#include "homcolim/graded_algebra.hpp"

namespace homcolim {

QVec IGradedAlgebra::mul_vec(int w1, const QVec& x, int w2, const QVec& y) const {
  QVec out;
  for (const auto& [i1, c1] : x.entries())
    for (const auto& [i2, c2] : y.entries()) out.axpy(c1 * c2, mul(w1, i1, w2, i2));
  return out;
}

}  // namespace homcolim
