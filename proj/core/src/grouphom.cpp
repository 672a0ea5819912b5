#include "homcolim/grouphom.hpp"

#include <algorithm>
#include <map>

namespace homcolim {

void FinGroup::validate() const {
  if (order <= 0) throw validation_error("group: order must be positive");
  if (static_cast<int>(mult.size()) != order)
    throw validation_error("group: table size mismatch");
  for (const auto& row : mult) {
    if (static_cast<int>(row.size()) != order)
      throw validation_error("group: table not square");
    for (int x : row)
      if (x < 0 || x >= order) throw validation_error("group: entry out of range");
  }
  if (identity < 0 || identity >= order)
    throw validation_error("group: identity out of range");
  for (int a = 0; a < order; ++a)
    if (mult[identity][a] != a || mult[a][identity] != a)
      throw validation_error("group: identity law fails");
  for (int a = 0; a < order; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < order; ++b)
      if (mult[a][b] == identity && mult[b][a] == identity) has_inverse = true;
    if (!has_inverse) throw validation_error("group: element without inverse");
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          throw validation_error("group: associativity fails");
}

int FinGroup::inverse(int a) const {
  for (int b = 0; b < order; ++b)
    if (mult[a][b] == identity) return b;
  throw internal_error("group: inverse not found");
}

int FinGroup::element_order(int a) const {
  int x = a, n = 1;
  while (x != identity) {
    x = mult[x][a];
    ++n;
  }
  return n;
}

FinGroup cyclic_group(int q) {
  FinGroup g;
  g.order = q;
  g.identity = 0;
  g.mult.assign(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) g.mult[a][b] = (a + b) % q;
  g.validate();
  return g;
}

FinGroup permutation_group(int n, const std::vector<std::vector<int>>& generators) {
  std::vector<std::vector<int>> elems;
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  elems.push_back(id);
  auto compose = [n](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[i] = a[b[i]];
    return r;
  };
  for (size_t i = 0; i < elems.size(); ++i)
    for (const auto& gen : generators) {
      std::vector<int> next = compose(gen, elems[i]);
      if (std::find(elems.begin(), elems.end(), next) == elems.end())
        elems.push_back(next);
      if (elems.size() > 64) throw validation_error("permutation_group: order above cap");
    }
  FinGroup g;
  g.order = static_cast<int>(elems.size());
  g.identity = 0;
  g.mult.assign(g.order, std::vector<int>(g.order));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      auto prod = compose(elems[a], elems[b]);
      g.mult[a][b] = static_cast<int>(
          std::find(elems.begin(), elems.end(), prod) - elems.begin());
    }
  g.validate();
  return g;
}

FinGroup symmetric_group_3() { return permutation_group(3, {{1, 0, 2}, {1, 2, 0}}); }

template <typename K>
void GModuleT<K>::validate() const {
  check_internal(group != nullptr, "gmodule: group not set");
  if (rank < 0) throw validation_error("gmodule: negative rank");
  if (static_cast<int>(action.size()) != group->order)
    throw validation_error("gmodule: one action matrix per element");
  for (const auto& m : action)
    if (m.rows() != rank || m.cols() != rank)
      throw validation_error("gmodule: action matrix shape mismatch");
  if (action[group->identity] != Mat<K>::identity(rank))
    throw validation_error("gmodule: identity must act as identity");
  for (int a = 0; a < group->order; ++a)
    for (int b = 0; b < group->order; ++b)
      if (action[a] * action[b] != action[group->mult[a][b]])
        throw validation_error("gmodule: action is not a homomorphism");
}

template void GModuleT<Rat>::validate() const;
template void GModuleT<Int>::validate() const;

template <typename K>
GModuleT<K> trivial_module(const FinGroup& g, int rank) {
  GModuleT<K> m;
  m.group = &g;
  m.rank = rank;
  m.action.assign(g.order, Mat<K>::identity(rank));
  return m;
}

template QGModule trivial_module<Rat>(const FinGroup&, int);
template ZGModule trivial_module<Int>(const FinGroup&, int);

FinCategory as_category(const FinGroup& g) {
  return monoid_category(g.mult, g.identity);
}

namespace {

template <typename K>
DiagramFunctorT<K> as_functor(const FinCategory& c, const GModuleT<K>& m) {
  m.validate();
  DiagramFunctorT<K> f;
  f.cat = &c;
  f.dims = {m.rank};
  f.maps = m.action;
  return f;
}

template <typename K>
std::vector<HomologyClassSpace> oracle_impl(const FinGroup& g, const GModuleT<K>& m,
                                            int max_degree) {
  m.validate();
  int t = -1;
  for (int a = 0; a < g.order; ++a)
    if (g.element_order(a) == g.order) {
      t = a;
      break;
    }
  if (t < 0) throw validation_error("cyclic_group_oracle: group is not cyclic");
  Mat<K> tm1 = m.action[t] + Mat<K>::identity(m.rank).scaled(K(-1));
  Mat<K> norm(m.rank, m.rank);
  int x = g.identity;
  for (int i = 0; i < g.order; ++i) {
    norm = norm + m.action[x];
    x = g.mult[x][t];
  }
  int top = max_degree + 1;
  std::vector<int> dims(top + 1, m.rank);
  std::vector<Mat<K>> diffs(top + 1);
  for (int n = 1; n <= top; ++n) diffs[n] = (n % 2 == 1) ? tm1 : norm;
  ChainComplexT<K> c(std::move(dims), std::move(diffs));
  if constexpr (std::is_same_v<K, Rat>)
    return homology_q(c, 0, max_degree);
  else
    return homology_z(c, 0, max_degree);
}

}  // namespace

std::vector<HomologyClassSpace> group_homology(const FinGroup& g, const QGModule& m,
                                               int max_degree) {
  FinCategory c = as_category(g);
  return derived_colim(c, as_functor(c, m), max_degree);
}

std::vector<HomologyClassSpace> group_homology(const FinGroup& g, const ZGModule& m,
                                               int max_degree) {
  FinCategory c = as_category(g);
  return derived_colim(c, as_functor(c, m), max_degree);
}

std::vector<HomologyClassSpace> cyclic_group_oracle(const FinGroup& g, const ZGModule& m,
                                                    int max_degree) {
  return oracle_impl(g, m, max_degree);
}

std::vector<HomologyClassSpace> cyclic_group_oracle(const FinGroup& g, const QGModule& m,
                                                    int max_degree) {
  return oracle_impl(g, m, max_degree);
}

}  // namespace homcolim
