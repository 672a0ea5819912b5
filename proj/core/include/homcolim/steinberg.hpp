#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcolim/scalar.hpp"

namespace homcolim {

// Finite unital ring by full addition/multiplication tables. Elements are
// indices 0..size-1; zero is the additive identity found during validation.
struct FiniteRing {
  int size = 0;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  int zero = 0;
  int one = 0;

  // Exhaustively checks the ring axioms (abelian group under add,
  // associative mul with unit, distributivity) and the zero/one fields.
  void validate() const;
  int neg(int x) const;
};

// ℤ/m with the usual tables.
FiniteRing zmod(int m);

// Ring homomorphism b -> a as an image table.
struct RingHom {
  const FiniteRing* src = nullptr;
  const FiniteRing* dst = nullptr;
  std::vector<int> image;

  // Checks additivity, multiplicativity, and unit preservation.
  void validate() const;
  bool surjective() const;
  std::vector<int> kernel() const;
};

// x mod m -> x mod k for k | m.
RingHom zmod_projection(const FiniteRing& b, const FiniteRing& a);

// N×N matrices over a finite ring, stored row-major as element indices.
struct RingMatrix {
  int n = 0;
  std::vector<int> entry;  // n*n indices into the ring carrier

  int at(int i, int j) const { return entry[i * n + j]; }
};

struct ElementaryContext {
  const FiniteRing* ring = nullptr;
  int n = 3;

  void validate() const;  // requires n >= 3
  RingMatrix identity() const;
  RingMatrix mul(const RingMatrix& x, const RingMatrix& y) const;
  // Elementary matrix e_{i,j}(x): identity plus x in position (i,j).
  // Indices are 1-based per the usual convention; i == j is rejected.
  RingMatrix e_matrix(int i, int j, int x) const;
  // e_{i,j}(x)^{-1} = e_{i,j}(-x)
  RingMatrix e_inverse(int i, int j, int x) const;
};

// Outcome of an exhaustive relation check; `witness` describes the first
// violation when ok is false.
struct SteinbergVerdict {
  bool ok = true;
  long checked = 0;
  std::string witness;
};

// Verifies the three Steinberg relation families as matrix identities:
//   e_{i,j}(x) e_{i,j}(y) = e_{i,j}(x+y),
//   [e_{i,j}(x), e_{j,k}(y)] = e_{i,k}(xy)          (i, j, k distinct),
//   [e_{i,j}(x), e_{i',j'}(y)] = 1                  (j != i', i != j'),
// exhaustively over all ring pairs (x, y) and index tuples. Throws
// validation_error when the exhaustive budget |ring|^2 · tuples exceeds 10^7.
SteinbergVerdict steinberg_relations_check(const ElementaryContext& ctx);

// D = B ×_A B along a verified surjection f: pairs (x, y) with f(x) = f(y),
// componentwise operations. `pairs[d]` recovers the (x, y) behind index d,
// and proj1/proj2 are the verified coordinate projections D -> B.
struct FiberProduct {
  FiniteRing ring;
  std::vector<std::pair<int, int>> pairs;

  // Coordinate projections D -> B as (validated) homomorphisms; bound to
  // this object and the original B, so both must outlive the result.
  RingHom proj(int coordinate, const FiniteRing& b) const;
};

FiberProduct fiber_product(const FiniteRing& b, const FiniteRing& a, const RingHom& f);

// For every x, y in ker(f), checks that e_{1,2}((x,0)) and e_{2,1}((0,y))
// commute exactly in E_N(D) (their product (x,0)·(0,y) vanishes in D), and
// that both coordinate projections send the commutator to the identity of
// E_N(B).
SteinbergVerdict gamma_generators_trivial(const FiniteRing& b, const FiniteRing& a,
                                          const RingHom& f, int n);

}  // namespace homcolim
