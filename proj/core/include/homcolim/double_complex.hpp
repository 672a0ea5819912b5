#pragma once

#include "homcolim/chain_complex.hpp"

namespace homcolim {

// First-quadrant double complex on the rectangle [0,I] x [0,J].
// h(i,j) : (i,j) -> (i-1,j), v(i,j) : (i,j) -> (i,j-1). Both square to zero
// and the squares commute; totalize introduces the sign twist (-1)^i on v,
// after which the two directions anticommute and the total differential
// squares to zero.
class DoubleComplex {
 public:
  DoubleComplex(int max_i, int max_j,
                std::vector<std::vector<int>> dims,
                std::vector<std::vector<QMat>> horiz,
                std::vector<std::vector<QMat>> vert);

  int max_i() const { return max_i_; }
  int max_j() const { return max_j_; }
  int dim(int i, int j) const {
    if (i < 0 || j < 0 || i > max_i_ || j > max_j_) return 0;
    return dims_[i][j];
  }
  QMat horizontal(int i, int j) const;  // (i,j) -> (i-1,j)
  QMat vertical(int i, int j) const;    // (i,j) -> (i,j-1)

  // Offset of the (i,j) summand inside Tot_{i+j}, summands ordered by i.
  int total_offset(int i, int j) const;
  int total_dim(int n) const;

 private:
  int max_i_, max_j_;
  std::vector<std::vector<int>> dims_;
  std::vector<std::vector<QMat>> horiz_, vert_;
};

ChainComplexQ totalize(const DoubleComplex& d);

// Axis swap (with the matching sign adjustment handled by the twist in
// totalize); homology of the totalization is unchanged.
DoubleComplex transpose(const DoubleComplex& d);

}  // namespace homcolim
