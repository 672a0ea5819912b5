#pragma once

#include "homcolim/chain_complex.hpp"

namespace homcolim {

// Degreewise linear map commuting with the differentials (checked).
class ChainMap {
 public:
  ChainMap(const ChainComplexQ* source, const ChainComplexQ* target,
           std::vector<QMat> components);

  const ChainComplexQ& source() const { return *source_; }
  const ChainComplexQ& target() const { return *target_; }
  QMat component(int n) const;

 private:
  const ChainComplexQ* source_;
  const ChainComplexQ* target_;
  std::vector<QMat> components_;
};

// Matrix of H_n(f) in the stored representative bases: column j holds the
// homology coordinates of f(source representative j).
QMat induced_on_homology(const ChainMap& f, int n,
                         const std::vector<HomologyClassSpace>& source_h,
                         const std::vector<HomologyClassSpace>& target_h);

// Convenience overload computing homology of both ends.
QMat induced_on_homology(const ChainMap& f, int n);

struct LesNode {
  int degree;          // degree of the H(A) term the node pattern starts at
  std::string where;   // "A", "B", or "C"
  bool exact;
  int defect;          // dim ker(out) - rank(in), zero when exact
};

struct LesResult {
  bool exact = true;
  std::vector<LesNode> nodes;
  // Connecting homomorphisms H_n(C) -> H_{n-1}(A), indexed by n.
  std::vector<QMat> connecting;
  std::vector<HomologyClassSpace> ha, hb, hc;
  std::vector<QMat> induced_f, induced_g;  // per degree
};

// Checks that 0 -> A -f-> B -g-> C -> 0 is degreewise exact, constructs the
// connecting maps by the snake procedure and verifies exactness of the long
// sequence ... -> H_n(A) -> H_n(B) -> H_n(C) -> H_{n-1}(A) -> ... through
// degree `max_degree`. Throws validation_error when the input is not a
// degreewise-exact short exact sequence.
LesResult les_check(const ChainMap& f, const ChainMap& g, int max_degree);

}  // namespace homcolim
