#pragma once

#include "homcolim/matrix.hpp"
#include "homcolim/scalar.hpp"

namespace homcolim {

// Weight-graded algebra presented through per-weight components: a
// dimension for each weight and basis-element products landing in the sum
// of the weights. Connected examples put the unit (if any) in weight 0.
struct IGradedAlgebra {
  virtual ~IGradedAlgebra() = default;
  virtual int dim(int w) const = 0;
  // product of basis element i1 of weight w1 with i2 of weight w2,
  // expressed in the weight w1+w2 basis.
  virtual QVec mul(int w1, int i1, int w2, int i2) const = 0;

  // bilinear extension to arbitrary components
  QVec mul_vec(int w1, const QVec& x, int w2, const QVec& y) const;
};

// tk[t]/(t^k): one basis element in each weight 1..k-1.
class TruncPolyAlgebra : public IGradedAlgebra {
 public:
  explicit TruncPolyAlgebra(int k) : k_(k) {
    if (k < 1) throw validation_error("trunc poly: k must be >= 1");
  }
  int dim(int w) const override { return (w >= 1 && w < k_) ? 1 : 0; }
  QVec mul(int w1, int, int w2, int) const override {
    return (w1 + w2 < k_) ? QVec::unit(0) : QVec();
  }

 private:
  int k_;
};

// dims[w-1] basis elements in weight w, every product zero.
class ZeroMultAlgebra : public IGradedAlgebra {
 public:
  explicit ZeroMultAlgebra(std::vector<int> dims) : dims_(std::move(dims)) {}
  int dim(int w) const override {
    return (w >= 1 && w <= static_cast<int>(dims_.size())) ? dims_[w - 1] : 0;
  }
  QVec mul(int, int, int, int) const override { return QVec(); }

 private:
  std::vector<int> dims_;
};

}  // namespace homcolim
