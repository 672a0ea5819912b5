#pragma once

#include <map>
#include <mutex>

#include "homcolim/graded_algebra.hpp"
#include "homcolim/subspace.hpp"

namespace homcolim {

// Reduced tensor algebra T̄(V) = ⊕_{n≥1} V^{⊗n} on generators with
// positive integer weights, truncated at weight W. Weight-w basis: all
// generator words of total weight w, ordered by (length, lex).
class GradedFreeAlgebra {
 public:
  GradedFreeAlgebra(std::vector<int> generator_weights, int truncation);

  int n_generators() const { return static_cast<int>(weights_.size()); }
  int generator_weight(int g) const { return weights_[g]; }
  int truncation() const { return W_; }

  const std::vector<std::vector<int>>& basis(int w) const;
  int dim(int w) const { return static_cast<int>(basis(w).size()); }
  int index_of(int w, const std::vector<int>& word) const;
  int word_weight(const std::vector<int>& word) const;

 private:
  std::vector<int> weights_;
  int W_;
  std::vector<std::vector<std::vector<int>>> basis_;  // per weight 0..W
};

struct WeightSubspace {
  int weight = 0;
  Subspace space;
};

WeightSubspace full_component(const GradedFreeAlgebra& f, int w);

// span{xy} from basis products (word concatenation, bilinear extension)
WeightSubspace component_product(const GradedFreeAlgebra& f, const WeightSubspace& a,
                                 const WeightSubspace& b);
// span{xy − yx}
WeightSubspace commutator_component(const GradedFreeAlgebra& f, const WeightSubspace& a,
                                    const WeightSubspace& b);
// [F,F]_w = Σ_{u+v=w} [F_u, F_v]
WeightSubspace ff_component(const GradedFreeAlgebra& f, int w);

// View of T̄(V) as a graded algebra (identity-presentation target).
class FreeTensorView : public IGradedAlgebra {
 public:
  explicit FreeTensorView(const GradedFreeAlgebra* f) : f_(f) {}
  int dim(int w) const override {
    return (w >= 1 && w <= f_->truncation()) ? f_->dim(w) : 0;
  }
  QVec mul(int w1, int i1, int w2, int i2) const override;

 private:
  const GradedFreeAlgebra* f_;
};

// Weight-graded presentation F ↠ A with R = ker. Generator images must be
// weight-homogeneous; surjectivity in every weight ≤ w is checked by
// validate(w).
class GradedPresentation {
 public:
  GradedPresentation(const GradedFreeAlgebra* f, const IGradedAlgebra* a,
                     std::vector<QVec> generator_images);

  const GradedFreeAlgebra& free_algebra() const { return *f_; }
  const IGradedAlgebra& target() const { return *a_; }

  // evaluation F_w -> A_w in the canonical bases
  QMat eval_matrix(int w) const;
  void validate(int w_max) const;

  WeightSubspace kernel_component(int w) const;          // R_w
  // (R^n)_w by memoized convolution; n = 0 is the full component F_w.
  WeightSubspace ideal_power_component(int n, int w) const;

 private:
  const GradedFreeAlgebra* f_;
  const IGradedAlgebra* a_;
  std::vector<QVec> images_;
  mutable std::mutex cache_mu_;
  mutable std::map<std::pair<int, int>, WeightSubspace> power_cache_;
};

// (1/w) Σ_{d|w} φ(d) m^{w/d}: dimension of the cyclic coinvariants of
// V^{⊗w} for dim V = m.
Int necklace_count(int m, int w);

// Per-weight dims of HC_{2n+1}(A) = (R^{n+1} ∩ [F,F]) / [R,R^n] for
// weights 1..w_max; the containment [R,R^n] ⊆ R^{n+1} ∩ [F,F] is asserted
// before quotienting.
std::vector<int> hopf_hc_odd(const GradedPresentation& p, int n, int w_max);

// m^w = necklace_count(m,w) + dim [F,F]_w for every w <= w_max
bool lemma56_dimension_check(int m, int w_max);

}  // namespace homcolim
