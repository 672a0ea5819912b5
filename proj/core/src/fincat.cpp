#include "homcolim/fincat.hpp"

#include <functional>
#include <map>

#include "homcolim/echelon.hpp"

namespace homcolim {

int FinCategory::compose(int g, int f) const {
  if (cod[f] != dom[g]) throw internal_error("compose: morphisms not composable");
  int r = comp[g][f];
  check_internal(r >= 0, "compose: missing table entry");
  return r;
}

void FinCategory::validate(int max_morphisms) const {
  int nm = n_morphisms();
  if (n_objects < 0) throw validation_error("category: negative object count");
  if (nm > max_morphisms)
    throw validation_error("category: morphism count " + std::to_string(nm) +
                           " exceeds cap " + std::to_string(max_morphisms));
  if (static_cast<int>(cod.size()) != nm || static_cast<int>(comp.size()) != nm)
    throw validation_error("category: dom/cod/comp size mismatch");
  if (static_cast<int>(identity.size()) != n_objects)
    throw validation_error("category: one identity per object required");
  for (int m = 0; m < nm; ++m) {
    if (dom[m] < 0 || dom[m] >= n_objects || cod[m] < 0 || cod[m] >= n_objects)
      throw validation_error("category: morphism endpoint out of range");
    if (static_cast<int>(comp[m].size()) != nm)
      throw validation_error("category: composition table not square");
  }
  for (int a = 0; a < n_objects; ++a) {
    int e = identity[a];
    if (e < 0 || e >= nm || dom[e] != a || cod[e] != a)
      throw validation_error("category: identity of object " + std::to_string(a) +
                             " is not an endomorphism of it");
  }
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      int r = comp[g][f];
      if (cod[f] != dom[g]) {
        if (r != -1) throw validation_error("category: composite of non-composable pair");
        continue;
      }
      if (r < 0 || r >= nm || dom[r] != dom[f] || cod[r] != cod[g])
        throw validation_error("category: ill-typed composite");
    }
  for (int f = 0; f < nm; ++f) {
    if (comp[identity[cod[f]]][f] != f || comp[f][identity[dom[f]]] != f)
      throw validation_error("category: identity law fails at morphism " +
                             std::to_string(f));
  }
  for (int h = 0; h < nm; ++h)
    for (int g = 0; g < nm; ++g) {
      if (cod[g] != dom[h]) continue;
      for (int f = 0; f < nm; ++f) {
        if (cod[f] != dom[g]) continue;
        if (comp[comp[h][g]][f] != comp[h][comp[g][f]])
          throw validation_error("category: associativity fails");
      }
    }
}

namespace {

FinCategory from_morphism_list(int n_objects, std::vector<int> dom, std::vector<int> cod,
                               std::vector<int> identity,
                               const std::function<int(int, int)>& compose) {
  FinCategory c;
  c.n_objects = n_objects;
  c.dom = std::move(dom);
  c.cod = std::move(cod);
  c.identity = std::move(identity);
  int nm = c.n_morphisms();
  c.comp.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (c.cod[f] == c.dom[g]) c.comp[g][f] = compose(g, f);
  c.validate(std::max(64, nm));  // builders may exceed the input-facing cap
  return c;
}

}  // namespace

FinCategory discrete_category(int n_objects) {
  std::vector<int> obj(n_objects);
  for (int a = 0; a < n_objects; ++a) obj[a] = a;
  return from_morphism_list(n_objects, obj, obj, obj,
                            [](int g, int f) { return f == g ? f : -1; });
}

FinCategory poset_category(int n, const std::vector<bool>& leq) {
  if (static_cast<int>(leq.size()) != n * n)
    throw validation_error("poset: relation matrix must be n×n");
  std::vector<int> dom, cod, identity(n, -1);
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a == b || leq[a * n + b]) {
        index[a][b] = static_cast<int>(dom.size());
        dom.push_back(a);
        cod.push_back(b);
      }
  for (int a = 0; a < n; ++a) identity[a] = index[a][a];
  auto compose = [&](int g, int f) { return index[dom[f]][cod[g]]; };
  return from_morphism_list(n, dom, cod, identity, compose);
}

FinCategory monoid_category(const std::vector<std::vector<int>>& mult, int e) {
  int nm = static_cast<int>(mult.size());
  std::vector<int> zero(nm, 0);
  return from_morphism_list(1, zero, zero, {e},
                            [&](int g, int f) { return mult[g][f]; });
}

FinCategory indiscrete_category(int n_objects) {
  std::vector<int> dom, cod, identity(n_objects, -1);
  for (int a = 0; a < n_objects; ++a)
    for (int b = 0; b < n_objects; ++b) {
      if (a == b) identity[a] = static_cast<int>(dom.size());
      dom.push_back(a);
      cod.push_back(b);
    }
  auto compose = [&](int g, int f) { return dom[f] * n_objects + cod[g]; };
  return from_morphism_list(n_objects, dom, cod, identity, compose);
}

template <typename K>
void DiagramFunctorT<K>::validate() const {
  check_internal(cat != nullptr, "functor: category not set");
  if (static_cast<int>(dims.size()) != cat->n_objects ||
      static_cast<int>(maps.size()) != cat->n_morphisms())
    throw validation_error("functor: one dimension per object and one matrix per morphism");
  for (int d : dims)
    if (d < 0) throw validation_error("functor: negative dimension");
  int nm = cat->n_morphisms();
  for (int f = 0; f < nm; ++f)
    if (maps[f].rows() != dims[cat->cod[f]] || maps[f].cols() != dims[cat->dom[f]])
      throw validation_error("functor: matrix shape mismatch at morphism " +
                             std::to_string(f));
  for (int a = 0; a < cat->n_objects; ++a)
    if (maps[cat->identity[a]] != Mat<K>::identity(dims[a]))
      throw validation_error("functor: identity not sent to identity matrix");
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      if (cat->cod[f] != cat->dom[g]) continue;
      if (maps[g] * maps[f] != maps[cat->comp[g][f]])
        throw validation_error("functor: composition not respected");
    }
}

template void DiagramFunctorT<Rat>::validate() const;
template void DiagramFunctorT<Int>::validate() const;

template <typename K>
DiagramFunctorT<K> constant_functor(const FinCategory& c, int dim) {
  DiagramFunctorT<K> m;
  m.cat = &c;
  m.dims.assign(c.n_objects, dim);
  m.maps.assign(c.n_morphisms(), Mat<K>::identity(dim));
  return m;
}

template QFunctor constant_functor<Rat>(const FinCategory&, int);
template ZFunctor constant_functor<Int>(const FinCategory&, int);

QFunctor external_tensor(const QFunctor& phi, const QFunctor& psi) {
  check_internal(phi.cat == psi.cat, "external_tensor: functors on different categories");
  QFunctor out;
  out.cat = phi.cat;
  out.dims.resize(phi.dims.size());
  for (size_t a = 0; a < phi.dims.size(); ++a) out.dims[a] = phi.dims[a] * psi.dims[a];
  out.maps.reserve(phi.maps.size());
  for (size_t f = 0; f < phi.maps.size(); ++f)
    out.maps.push_back(phi.maps[f].kron(psi.maps[f]));
  return out;
}

std::vector<NerveChain> nerve_chains(const FinCategory& c, int n, bool normalized) {
  std::vector<NerveChain> out;
  if (n == 0) {
    for (int a = 0; a < c.n_objects; ++a) out.push_back({a, {}});
    return out;
  }
  // Extend chains on the left: state is dom(α_1 … partial prefix)'s cod
  // side; we build (α_1,…,α_n) with dom(α_i) = cod(α_{i+1}).
  std::vector<int> stack;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      out.push_back({c.dom[stack.back()], stack});
      return;
    }
    for (int f = 0; f < c.n_morphisms(); ++f) {
      if (normalized && c.is_identity(f)) continue;
      if (depth > 0 && c.cod[f] != c.dom[stack.back()]) continue;
      stack.push_back(f);
      self(self, depth + 1);
      stack.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

// Offsets of summands within a chain group, keyed by the chain contents.
struct DegreeIndex {
  std::vector<NerveChain> chains;
  std::map<std::pair<int, std::vector<int>>, int> offset;
  int total = 0;
};

template <typename K>
DegreeIndex index_degree(const FinCategory& c, const DiagramFunctorT<K>& m, int n,
                         bool normalized) {
  DegreeIndex ix;
  ix.chains = nerve_chains(c, n, normalized);
  for (const NerveChain& ch : ix.chains) {
    ix.offset[{ch.object, ch.morphs}] = ix.total;
    ix.total += m.dims[ch.object];
  }
  return ix;
}

bool chain_has_identity(const FinCategory& c, const std::vector<int>& morphs) {
  for (int f : morphs)
    if (c.is_identity(f)) return true;
  return false;
}

}  // namespace

template <typename K>
ChainComplexT<K> colim_complex(const FinCategory& c, const DiagramFunctorT<K>& m,
                               int max_degree, bool normalized) {
  if (max_degree < 0) throw validation_error("colim_complex: max_degree must be >= 0");
  m.validate();
  int top = max_degree + 1;
  std::vector<DegreeIndex> ix;
  ix.reserve(top + 1);
  for (int n = 0; n <= top; ++n) ix.push_back(index_degree(c, m, n, normalized));

  std::vector<int> dims(top + 1);
  for (int n = 0; n <= top; ++n) dims[n] = ix[n].total;
  std::vector<Mat<K>> diffs(top + 1);
  for (int n = 1; n <= top; ++n) {
    Mat<K> d(dims[n - 1], dims[n]);
    for (const NerveChain& ch : ix[n].chains) {
      int src = ix[n].offset.at({ch.object, ch.morphs});
      int dsrc = m.dims[ch.object];
      for (int i = 0; i <= n; ++i) {
        std::vector<int> face = ch.morphs;
        Mat<K> block;
        int face_obj;
        if (i == 0) {
          face.erase(face.begin());
          face_obj = ch.object;
          block = Mat<K>::identity(dsrc);
        } else if (i < n) {
          face[i - 1] = c.compose(ch.morphs[i - 1], ch.morphs[i]);
          face.erase(face.begin() + i);
          face_obj = ch.object;
          block = Mat<K>::identity(dsrc);
        } else {
          int alpha = ch.morphs[n - 1];
          face.pop_back();
          face_obj = c.cod[alpha];
          block = m.maps[alpha];
        }
        if (normalized && chain_has_identity(c, face)) continue;
        int dst = ix[n - 1].offset.at({face_obj, face});
        K sign = (i % 2 == 0) ? K(1) : K(-1);
        for (int r = 0; r < block.rows(); ++r)
          for (const auto& [cc, v] : block.row(r).entries())
            d.add(dst + r, src + cc, sign * v);
      }
    }
    diffs[n] = std::move(d);
  }
  return ChainComplexT<K>(std::move(dims), std::move(diffs));
}

template ChainComplexQ colim_complex<Rat>(const FinCategory&, const QFunctor&, int, bool);
template ChainComplexZ colim_complex<Int>(const FinCategory&, const ZFunctor&, int, bool);

std::vector<HomologyClassSpace> derived_colim(const FinCategory& c, const QFunctor& m,
                                              int max_degree, bool normalized) {
  return homology_q(colim_complex(c, m, max_degree, normalized), 0, max_degree);
}

std::vector<HomologyClassSpace> derived_colim(const FinCategory& c, const ZFunctor& m,
                                              int max_degree, bool normalized) {
  return homology_z(colim_complex(c, m, max_degree, normalized), 0, max_degree);
}

Colim0Result colim0_coeq(const FinCategory& c, const QFunctor& m, int base_object) {
  m.validate();
  if (!is_strongly_connected(c))
    throw validation_error("colim0_coeq: category is not strongly connected");
  if (base_object < 0 || base_object >= c.n_objects)
    throw validation_error("colim0_coeq: base object out of range");
  int d0 = m.dims[base_object];
  // Relation span: (M(α) − M(β)) v for all parallel pairs α,β : a → base.
  Echelon ech(d0, false);
  int nm = c.n_morphisms();
  for (int a = 0; a < nm; ++a) {
    if (c.cod[a] != base_object) continue;
    for (int b = 0; b < nm; ++b) {
      if (c.cod[b] != base_object || c.dom[b] != c.dom[a]) continue;
      QMat diff = m.maps[a] + m.maps[b].scaled(Rat(-1));
      QMat dt = diff.transpose();
      for (int r = 0; r < dt.rows(); ++r) ech.insert(dt.row(r));
    }
  }
  std::vector<QVec> rel = ech.canonical_rows();
  // Quotient basis: coordinates at the non-pivot columns after reducing
  // modulo the relation span.
  std::vector<bool> pivot(d0, false);
  for (const QVec& r : rel)
    if (!r.entries().empty()) pivot[r.entries().front().first] = true;
  Colim0Result out;
  for (int j = 0; j < d0; ++j)
    if (!pivot[j]) ++out.dim;
  out.projection = QMat(out.dim, d0);
  for (int j = 0; j < d0; ++j) {
    QVec v = QVec::unit(j);
    for (const QVec& r : rel) {
      Rat cv = v.at(r.entries().front().first);
      if (cv != 0) v.axpy(-cv, r);
    }
    int row = 0;
    for (int k = 0; k < d0; ++k) {
      if (pivot[k]) continue;
      Rat cv = v.at(k);
      if (cv != 0) out.projection.set(row, j, cv);
      ++row;
    }
  }
  return out;
}

bool is_strongly_connected(const FinCategory& c) {
  std::vector<std::vector<bool>> hom(c.n_objects, std::vector<bool>(c.n_objects, false));
  for (int f = 0; f < c.n_morphisms(); ++f) hom[c.dom[f]][c.cod[f]] = true;
  for (int a = 0; a < c.n_objects; ++a)
    for (int b = 0; b < c.n_objects; ++b)
      if (!hom[a][b]) return false;
  return true;
}

CoproductTable has_pairwise_coproducts(const FinCategory& c) {
  int n = c.n_objects, nm = c.n_morphisms();
  CoproductTable out;
  out.ok = true;
  out.entries.assign(static_cast<size_t>(n) * n, {});
  for (int a = 0; a < n && out.ok; ++a)
    for (int b = 0; b < n && out.ok; ++b) {
      bool found = false;
      for (int obj = 0; obj < n && !found; ++obj)
        for (int ia = 0; ia < nm && !found; ++ia) {
          if (c.dom[ia] != a || c.cod[ia] != obj) continue;
          for (int ib = 0; ib < nm && !found; ++ib) {
            if (c.dom[ib] != b || c.cod[ib] != obj) continue;
            bool universal = true;
            for (int d = 0; d < n && universal; ++d)
              for (int f = 0; f < nm && universal; ++f) {
                if (c.dom[f] != a || c.cod[f] != d) continue;
                for (int g = 0; g < nm && universal; ++g) {
                  if (c.dom[g] != b || c.cod[g] != d) continue;
                  int count = 0;
                  for (int h = 0; h < nm; ++h) {
                    if (c.dom[h] != obj || c.cod[h] != d) continue;
                    if (c.comp[h][ia] == f && c.comp[h][ib] == g) ++count;
                  }
                  if (count != 1) universal = false;
                }
              }
            if (universal) {
              out.entries[static_cast<size_t>(a) * n + b] = {obj, ia, ib};
              found = true;
            }
          }
        }
      if (!found) out.ok = false;
    }
  return out;
}

}  // namespace homcolim
