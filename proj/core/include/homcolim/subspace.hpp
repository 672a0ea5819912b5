#pragma once

#include <optional>
#include <vector>

#include "homcolim/echelon.hpp"

namespace homcolim {

// Linear subspace of ℚ^n in canonical reduced-echelon form. Two equal
// subspaces compare equal componentwise.
class Subspace {
 public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}
  Subspace(int ambient_dim, const std::vector<QVec>& spanning_vectors);

  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<QVec>& basis() const { return basis_; }

  bool contains(const QVec& v) const;
  bool contains(const Subspace& other) const;
  // First basis vector of `other` outside this subspace, if any.
  std::optional<QVec> witness_outside(const Subspace& other) const;

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

 private:
  int ambient_;
  std::vector<QVec> basis_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// dim(big) - dim(small); requires small ⊆ big, else throws with a witness.
int quotient_dim(const Subspace& big, const Subspace& small);

// Explicit quotient V/rel of the ambient space: projection ∘ section = id,
// projection kills rel. The section includes the non-pivot coordinates.
struct QuotientMap {
  int dim = 0;
  QMat projection;  // ambient -> quotient
  QMat section;     // quotient -> ambient
};

QuotientMap quotient_map(const Subspace& rel);

}  // namespace homcolim
