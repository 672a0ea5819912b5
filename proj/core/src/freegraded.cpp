#include "homcolim/freegraded.hpp"

#include <algorithm>
#include <numeric>

namespace homcolim {

GradedFreeAlgebra::GradedFreeAlgebra(std::vector<int> generator_weights, int truncation)
    : weights_(std::move(generator_weights)), W_(truncation) {
  if (weights_.empty()) throw validation_error("free algebra: needs at least one generator");
  for (int w : weights_)
    if (w < 1) throw validation_error("free algebra: generator weights must be positive");
  if (W_ < 1) throw validation_error("free algebra: truncation must be >= 1");
  basis_.resize(W_ + 1);
  // lex enumeration per weight, then stable sort by length
  for (int w = 1; w <= W_; ++w) {
    std::vector<int> word;
    auto rec = [&](auto&& self, int remaining) -> void {
      if (remaining == 0) {
        basis_[w].push_back(word);
        return;
      }
      for (int g = 0; g < n_generators(); ++g) {
        if (weights_[g] > remaining) continue;
        word.push_back(g);
        self(self, remaining - weights_[g]);
        word.pop_back();
      }
    };
    rec(rec, w);
    std::stable_sort(basis_[w].begin(), basis_[w].end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                       return a.size() < b.size();
                     });
  }
}

const std::vector<std::vector<int>>& GradedFreeAlgebra::basis(int w) const {
  if (w < 1 || w > W_)
    throw validation_error("free algebra: weight " + std::to_string(w) +
                           " outside truncation window");
  return basis_[w];
}

int GradedFreeAlgebra::index_of(int w, const std::vector<int>& word) const {
  const auto& b = basis(w);
  auto it = std::find(b.begin(), b.end(), word);
  check_internal(it != b.end(), "free algebra: word not in basis");
  return static_cast<int>(it - b.begin());
}

int GradedFreeAlgebra::word_weight(const std::vector<int>& word) const {
  int w = 0;
  for (int g : word) w += weights_[g];
  return w;
}

WeightSubspace full_component(const GradedFreeAlgebra& f, int w) {
  return {w, Subspace::full(f.dim(w))};
}

namespace {

// product of concrete vectors x ∈ F_wa, y ∈ F_wb by word concatenation
QVec concat_product(const GradedFreeAlgebra& f, int wa, const QVec& x, int wb,
                    const QVec& y) {
  QVec out;
  for (const auto& [i, ci] : x.entries())
    for (const auto& [j, cj] : y.entries()) {
      std::vector<int> word = f.basis(wa)[i];
      const auto& wj = f.basis(wb)[j];
      word.insert(word.end(), wj.begin(), wj.end());
      out.axpy(ci * cj, QVec::unit(f.index_of(wa + wb, word)));
    }
  return out;
}

}  // namespace

WeightSubspace component_product(const GradedFreeAlgebra& f, const WeightSubspace& a,
                                 const WeightSubspace& b) {
  int w = a.weight + b.weight;
  if (w > f.truncation()) throw validation_error("component_product: truncation overflow");
  std::vector<QVec> span;
  for (const QVec& x : a.space.basis())
    for (const QVec& y : b.space.basis())
      span.push_back(concat_product(f, a.weight, x, b.weight, y));
  return {w, Subspace(f.dim(w), span)};
}

WeightSubspace commutator_component(const GradedFreeAlgebra& f, const WeightSubspace& a,
                                    const WeightSubspace& b) {
  int w = a.weight + b.weight;
  if (w > f.truncation())
    throw validation_error("commutator_component: truncation overflow");
  std::vector<QVec> span;
  for (const QVec& x : a.space.basis())
    for (const QVec& y : b.space.basis()) {
      QVec c = concat_product(f, a.weight, x, b.weight, y);
      c.axpy(Rat(-1), concat_product(f, b.weight, y, a.weight, x));
      span.push_back(c);
    }
  return {w, Subspace(f.dim(w), span)};
}

WeightSubspace ff_component(const GradedFreeAlgebra& f, int w) {
  Subspace acc(f.dim(w));
  for (int u = 1; u < w; ++u) {
    WeightSubspace c =
        commutator_component(f, full_component(f, u), full_component(f, w - u));
    acc = subspace_sum(acc, c.space);
  }
  return {w, acc};
}

QVec FreeTensorView::mul(int w1, int i1, int w2, int i2) const {
  if (w1 + w2 > f_->truncation()) return QVec();
  return concat_product(*f_, w1, QVec::unit(i1), w2, QVec::unit(i2));
}

GradedPresentation::GradedPresentation(const GradedFreeAlgebra* f, const IGradedAlgebra* a,
                                       std::vector<QVec> generator_images)
    : f_(f), a_(a), images_(std::move(generator_images)) {
  if (static_cast<int>(images_.size()) != f_->n_generators())
    throw validation_error("presentation: one image per generator");
  for (int g = 0; g < f_->n_generators(); ++g)
    for (const auto& [i, c] : images_[g].entries())
      if (i >= a_->dim(f_->generator_weight(g)))
        throw validation_error("presentation: generator image not weight-homogeneous");
}

QMat GradedPresentation::eval_matrix(int w) const {
  const auto& words = f_->basis(w);
  QMat m(a_->dim(w), static_cast<int>(words.size()));
  for (size_t j = 0; j < words.size(); ++j) {
    const std::vector<int>& word = words[j];
    QVec val = images_[word[0]];
    int wv = f_->generator_weight(word[0]);
    for (size_t k = 1; k < word.size(); ++k) {
      int wg = f_->generator_weight(word[k]);
      val = a_->mul_vec(wv, val, wg, images_[word[k]]);
      wv += wg;
    }
    for (const auto& [i, c] : val.entries()) m.set(i, static_cast<int>(j), c);
  }
  return m;
}

void GradedPresentation::validate(int w_max) const {
  for (int w = 1; w <= w_max; ++w) {
    QMat m = eval_matrix(w);
    if (rank_of(m) != a_->dim(w))
      throw validation_error("presentation: not surjective in weight " + std::to_string(w));
  }
}

WeightSubspace GradedPresentation::kernel_component(int w) const {
  RrefResult r = rref(eval_matrix(w));
  return {w, Subspace(f_->dim(w), r.kernel_basis)};
}

WeightSubspace GradedPresentation::ideal_power_component(int n, int w) const {
  if (n < 0) throw validation_error("ideal_power_component: power must be >= 0");
  if (w > f_->truncation())
    throw validation_error("ideal_power_component: truncation overflow");
  if (n == 0) return full_component(*f_, w);
  if (n == 1) return kernel_component(w);
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = power_cache_.find({n, w});
    if (it != power_cache_.end()) return it->second;
  }
  Subspace acc(f_->dim(w));
  for (int u = 1; u < w; ++u) {
    WeightSubspace ru = kernel_component(u);
    if (ru.space.dim() == 0) continue;
    WeightSubspace rest = ideal_power_component(n - 1, w - u);
    if (rest.space.dim() == 0) continue;
    acc = subspace_sum(acc, component_product(*f_, ru, rest).space);
  }
  WeightSubspace out{w, acc};
  std::lock_guard<std::mutex> lock(cache_mu_);
  power_cache_.emplace(std::make_pair(n, w), out);
  return out;
}

Int necklace_count(int m, int w) {
  if (m < 1 || w < 1) throw validation_error("necklace_count: m, w must be >= 1");
  Int total = 0;
  for (int d = 1; d <= w; ++d) {
    if (w % d != 0) continue;
    // Euler phi(d)
    int phi = 0;
    for (int x = 1; x <= d; ++x)
      if (std::gcd(x, d) == 1) ++phi;
    Int power = 1;
    for (int i = 0; i < w / d; ++i) power *= m;
    total += Int(phi) * power;
  }
  check_internal(total % w == 0, "necklace_count: Burnside sum not divisible");
  return total / w;
}

std::vector<int> hopf_hc_odd(const GradedPresentation& p, int n, int w_max) {
  const GradedFreeAlgebra& f = p.free_algebra();
  std::vector<int> out;
  for (int w = 1; w <= w_max; ++w) {
    WeightSubspace rpow = p.ideal_power_component(n + 1, w);
    WeightSubspace ff = ff_component(f, w);
    Subspace numerator = subspace_intersect(rpow.space, ff.space);
    Subspace denom(f.dim(w));
    for (int u = 1; u < w; ++u) {
      WeightSubspace ru = p.kernel_component(u);
      if (ru.space.dim() == 0) continue;
      WeightSubspace rn = p.ideal_power_component(n, w - u);
      if (rn.space.dim() == 0) continue;
      denom = subspace_sum(denom, commutator_component(f, ru, rn).space);
    }
    // the containment [R,R^n] ⊆ R^{n+1} ∩ [F,F]; quotient_dim throws with
    // a witness if it fails
    out.push_back(quotient_dim(numerator, denom));
  }
  return out;
}

bool lemma56_dimension_check(int m, int w_max) {
  GradedFreeAlgebra f(std::vector<int>(m, 1), w_max);
  for (int w = 1; w <= w_max; ++w) {
    Int lhs = 1;
    for (int i = 0; i < w; ++i) lhs *= m;
    if (lhs != necklace_count(m, w) + ff_component(f, w).space.dim()) return false;
  }
  return true;
}

}  // namespace homcolim
