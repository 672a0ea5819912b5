#pragma once

#include <string>
#include <vector>

#include "homcolim/chain_complex.hpp"

namespace homcolim {

// Finite category: objects 0..n_objects-1, morphisms 0..|mor|-1 with
// dom/cod, an identity per object, and a composition table. comp[g][f]
// holds g∘f when cod(f) == dom(g), otherwise -1. validate() checks the
// identity and associativity laws exhaustively.
struct FinCategory {
  int n_objects = 0;
  std::vector<int> dom;
  std::vector<int> cod;
  std::vector<int> identity;               // per object
  std::vector<std::vector<int>> comp;      // comp[g][f] = g∘f or -1

  int n_morphisms() const { return static_cast<int>(dom.size()); }
  bool is_identity(int m) const { return identity[cod[m]] == m; }
  int compose(int g, int f) const;         // checked g∘f

  // Exhaustive law check; categories above the morphism cap are rejected.
  void validate(int max_morphisms = 64) const;
};

// Common small categories used as building blocks.
FinCategory discrete_category(int n_objects);
// leq is row-major n×n: a unique morphism a→b whenever leq[a*n+b].
FinCategory poset_category(int n, const std::vector<bool>& leq);
// One object; morphisms = monoid elements with the given multiplication
// table (mult[a][b] = a·b) and identity element e.
FinCategory monoid_category(const std::vector<std::vector<int>>& mult, int e);
// Exactly one morphism between every ordered pair of objects.
FinCategory indiscrete_category(int n_objects);

// Functor C → finite free modules: a dimension per object and a matrix
// per morphism, M(f): M(dom f) → M(cod f). validate() checks identities
// and all composable pairs.
template <typename K>
struct DiagramFunctorT {
  const FinCategory* cat = nullptr;
  std::vector<int> dims;
  std::vector<Mat<K>> maps;

  void validate() const;
};

using QFunctor = DiagramFunctorT<Rat>;
using ZFunctor = DiagramFunctorT<Int>;

template <typename K>
DiagramFunctorT<K> constant_functor(const FinCategory& c, int dim);

// Objectwise tensor with Kronecker products on morphisms.
QFunctor external_tensor(const QFunctor& phi, const QFunctor& psi);

// Chain of n composable morphisms oriented • ←α1 • ←α2 … ←αn •, so
// dom(α_i) = cod(α_{i+1}). The module summand sits at dom(α_n). Degree-0
// chains have empty morphs and carry the object directly.
struct NerveChain {
  int object = 0;                 // dom(α_n), or the object itself at n=0
  std::vector<int> morphs;
};

std::vector<NerveChain> nerve_chains(const FinCategory& c, int n, bool normalized);

// C_•(C,M) through degree max_degree+1 (one guard degree), with
// δ_n = Σ (−1)^i d_i. Normalized (default) discards chains containing an
// identity morphism and kills faces landing on them.
template <typename K>
ChainComplexT<K> colim_complex(const FinCategory& c, const DiagramFunctorT<K>& m,
                               int max_degree, bool normalized = true);

std::vector<HomologyClassSpace> derived_colim(const FinCategory& c, const QFunctor& m,
                                              int max_degree, bool normalized = true);
std::vector<HomologyClassSpace> derived_colim(const FinCategory& c, const ZFunctor& m,
                                              int max_degree, bool normalized = true);

// colim_0 as the largest constant quotient of M at base_object: M(c0)
// modulo (M(α)−M(β))v over all parallel pairs α,β: c → c0. Requires a
// strongly connected category.
struct Colim0Result {
  int dim = 0;
  QMat projection;                // M(base) → quotient in a fixed basis
};

Colim0Result colim0_coeq(const FinCategory& c, const QFunctor& m, int base_object);

bool is_strongly_connected(const FinCategory& c);

// Brute-force binary coproducts via the universal property.
struct CoproductEntry {
  int obj = -1;
  int inj_a = -1;
  int inj_b = -1;
};

struct CoproductTable {
  bool ok = false;
  // entry(a,b) at index a*n_objects+b; filled only when found.
  std::vector<CoproductEntry> entries;
};

CoproductTable has_pairwise_coproducts(const FinCategory& c);

}  // namespace homcolim
