#pragma once

#include "homcolim/chain_map.hpp"
#include "homcolim/double_complex.hpp"
#include "homcolim/hochschild.hpp"

namespace homcolim {

// Connes (b,B) bicomplex B̄(A) of a unital algebra, columns n, rows m,
// entries A⊗Ā^{⊗(m−n)} for m ≥ n. In reduced mode the diagonal entries
// are Ā (the entrywise quotient by B̄(k)). weight >= 0 restricts a graded
// algebra (unit in weight 0) to its total-weight-w part.
DoubleComplex cyclic_bicomplex(const StructAlgebra& a, int max_n, bool reduced,
                               int weight = -1);

// HC_n (or HC̄_n when reduced) for 0 <= n <= max_degree via totalization;
// the grid carries one guard degree.
std::vector<HomologyClassSpace> cyclic_homology(const StructAlgebra& a, int max_degree,
                                                bool reduced = false, int weight = -1);

// HC of a non-unital algebra: HC̄ of its unitalization.
std::vector<HomologyClassSpace> cyclic_nonunital(const StructAlgebra& a, int max_degree,
                                                 int weight = -1);

// Connes λ-complex: C^λ_q = A^{⊗(q+1)} / im(1 − t), t = (−1)^q · rotation,
// with the unnormalized Hochschild boundary. Char-0 dual path to the
// bicomplex.
ChainComplexQ lambda_complex(const StructAlgebra& a, int max_degree, int weight = -1);

std::vector<HomologyClassSpace> lambda_homology(const StructAlgebra& a, int max_degree,
                                                int weight = -1);

// SBI long exact sequence … → HH_n →I HC_n →S HC_{n−2} →B HH_{n−1} → …
// realized by the column SES 0 → (column 0) → Tot B̄ → Tot/(column 0) → 0.
struct SbiResult {
  bool exact = false;
  bool shift_identified = false;  // H_n(quotient) = HC_{n−2} dims
  std::vector<int> hh_dims;       // H_n of the Hochschild column
  std::vector<int> hc_dims;       // H_n of Tot
  LesResult les;
};

SbiResult sbi_sequence(const StructAlgebra& a, int max_degree, int weight = -1);

}  // namespace homcolim
