#pragma once

#include <vector>

#include "homcolim/snf.hpp"
#include "homcolim/subspace.hpp"

namespace homcolim {

// Homology value in one degree. Over ℚ torsion is always empty; over ℤ the
// rank is the Betti number and torsion lists the invariant factors > 1.
struct HomologyClassSpace {
  int degree = 0;
  int dim = 0;                      // ℚ-dimension / Betti number
  std::vector<Int> torsion;         // invariant factors > 1, divisibility order
  std::vector<QVec> representatives;  // cycle representatives (ℚ mode)
};

// Bounded chain complex in homological convention: d_n : C_n -> C_{n-1},
// degrees 0..top. d_1 has index 1 in `differentials`; index 0 is unused and
// kept as an empty matrix so that indices line up with degrees.
template <typename K>
class ChainComplexT {
 public:
  ChainComplexT() = default;
  // dims[n] = dim C_n; diffs[n] : C_n -> C_{n-1} for 1 <= n <= top.
  ChainComplexT(std::vector<int> dims, std::vector<Mat<K>> diffs)
      : dims_(std::move(dims)), diffs_(std::move(diffs)) {
    validate();
  }

  int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
  int dim(int n) const {
    return (n >= 0 && n < static_cast<int>(dims_.size())) ? dims_[n] : 0;
  }
  // d_n : C_n -> C_{n-1}; zero matrix outside the stored range.
  Mat<K> differential(int n) const {
    if (n >= 1 && n < static_cast<int>(diffs_.size())) return diffs_[n];
    return Mat<K>(dim(n - 1), dim(n));
  }

 private:
  void validate();
  std::vector<int> dims_;
  std::vector<Mat<K>> diffs_;
};

using ChainComplexQ = ChainComplexT<Rat>;
using ChainComplexZ = ChainComplexT<Int>;

// H_n for max(0, from) <= n <= to, with deterministic cycle representatives.
// Degrees above top_degree - 1 are only correct if the complex genuinely
// vanishes beyond its stored range; callers build one guard degree.
std::vector<HomologyClassSpace> homology_q(const ChainComplexQ& c, int from, int to);

// Integral homology: Betti numbers and torsion via Smith normal form.
std::vector<HomologyClassSpace> homology_z(const ChainComplexZ& c, int from, int to);

ChainComplexQ tensor_to_q(const ChainComplexZ& c);

// Cycle and boundary subspaces in degree n (ℚ).
Subspace cycles(const ChainComplexQ& c, int n);
Subspace boundaries(const ChainComplexQ& c, int n);

}  // namespace homcolim
