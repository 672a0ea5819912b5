#pragma once

#include "homcolim/fincat.hpp"

namespace homcolim {

// Finite group given by its multiplication table. validate() checks the
// group laws exhaustively (associativity, identity, inverses).
struct FinGroup {
  int order = 0;
  std::vector<std::vector<int>> mult;   // mult[a][b] = a·b
  int identity = 0;

  void validate() const;
  int inverse(int a) const;
  int element_order(int a) const;
};

FinGroup cyclic_group(int q);
// Group generated by permutations of {0..n-1}; closure is expanded and the
// table built from composition.
FinGroup permutation_group(int n, const std::vector<std::vector<int>>& generators);
FinGroup symmetric_group_3();

// Finite free G-module: rank plus one action matrix per element.
template <typename K>
struct GModuleT {
  const FinGroup* group = nullptr;
  int rank = 0;
  std::vector<Mat<K>> action;

  void validate() const;
};

using QGModule = GModuleT<Rat>;
using ZGModule = GModuleT<Int>;

template <typename K>
GModuleT<K> trivial_module(const FinGroup& g, int rank);

// One object, morphisms = elements, composition = multiplication.
FinCategory as_category(const FinGroup& g);

// H_n(G, M) as a derived colimit over the one-object category (fincat's
// nerve engine). Default caps |G| <= 8, N <= 4 keep normalized chain
// counts (|G|-1)^{N+1} small.
std::vector<HomologyClassSpace> group_homology(const FinGroup& g, const QGModule& m,
                                               int max_degree);
std::vector<HomologyClassSpace> group_homology(const FinGroup& g, const ZGModule& m,
                                               int max_degree);

// Homology of the 2-periodic complex … →N M →(t−1) M → 0 for a cyclic
// group, an oracle independent of the nerve. Rejects non-cyclic groups.
std::vector<HomologyClassSpace> cyclic_group_oracle(const FinGroup& g, const ZGModule& m,
                                                    int max_degree);
std::vector<HomologyClassSpace> cyclic_group_oracle(const FinGroup& g, const QGModule& m,
                                                    int max_degree);

}  // namespace homcolim
