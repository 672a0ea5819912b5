#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "homcolim/fincat.hpp"
#include "homcolim/freegraded.hpp"
#include "homcolim/grouphom.hpp"
#include "homcolim/steinberg.hpp"
#include "homcolim/struct_algebra.hpp"

// JSON document parsing for the CLI. All schemas are strict: unknown
// shapes, missing fields, and axiom violations raise validation_error.
// Rationals travel as "p/q" strings (or plain integers).
namespace homcolim::io {

// {"objects": [...], "morphisms": [{"name","dom","cod"}...],
//  "compose": [[g, f, gf]...]} — names are strings; identity morphisms are
// auto-added as "id:<object>" unless a morphism with that name is listed.
struct CategoryDoc {
  FinCategory cat;
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
  std::map<std::string, int> obj_index;
  std::map<std::string, int> mor_index;
};

CategoryDoc parse_category(const std::string& json_text);

// {"coeff": "Q"|"Z", "dims": {obj: int}, "maps": {mor: [[...]]}} with
// M(f) of shape dim(cod) × dim(dom); identity maps may be omitted.
struct FunctorDoc {
  std::string coeff;  // "Q" or "Z"
  QFunctor q;         // populated when coeff == "Q"
  ZFunctor z;         // populated when coeff == "Z"
};

FunctorDoc parse_functor(const std::string& json_text, const CategoryDoc& c);

// {"table": [[...]]} (mult[i][j] = i·j, identity found by validation) or
// {"perm_generators": [[...]]} (permutations of {0..n-1}).
FinGroup parse_group(const std::string& json_text);

// {"dim": n, "unital": bool, "unit": [...], "table": [[[c_ijk]]],
//  "weights": [...] optional}; table[i][j] lists the coefficients of
// e_i·e_j in the basis.
StructAlgebra parse_algebra(const std::string& json_text);

// Graded StructAlgebra viewed through the per-weight interface.
class GradedStructView : public IGradedAlgebra {
 public:
  explicit GradedStructView(const StructAlgebra* a);
  int dim(int w) const override;
  QVec mul(int w1, int i1, int w2, int i2) const override;

 private:
  const StructAlgebra* a_;
  std::map<int, std::vector<int>> slots_;  // weight -> algebra indices
  std::vector<int> pos_;                   // algebra index -> position in slot
};

// {"generators": [{"name","weight"}...], "algebra": {...graded...},
//  "images": {gen: [coefficients in the weight component of the target]}}.
// The free algebra is truncated at `truncation` (>= max generator weight).
struct PresentationDoc {
  GradedFreeAlgebra free_algebra;
  StructAlgebra target;
  std::unique_ptr<GradedStructView> view;
  std::vector<std::string> generator_names;
  std::vector<QVec> images;

  GradedPresentation presentation() const;  // bound to this document
};

std::unique_ptr<PresentationDoc> parse_presentation(const std::string& json_text,
                                                    int truncation);

// {"zmod": m} or {"size": n, "add": [[...]], "mul": [[...]], "one": i}.
FiniteRing parse_ring(const std::string& json_text);

// {"map": [...]} — image index per source element.
RingHom parse_ring_hom(const std::string& json_text, const FiniteRing& src,
                       const FiniteRing& dst);

std::string read_file(const std::string& path);

}  // namespace homcolim::io
