#include "homcolim/cyclic.hpp"

#include <map>

namespace homcolim {

namespace {

using Tuple = std::vector<int>;

struct EntryBasis {
  std::vector<Tuple> tuples;
  std::map<Tuple, int> index;

  void add(const Tuple& t) {
    index[t] = static_cast<int>(tuples.size());
    tuples.push_back(t);
  }
  int dim() const { return static_cast<int>(tuples.size()); }
};

// tuples (a_0, ā_1..ā_k): slot 0 over the full A basis unless
// `slot0_abar`, the rest over Ā; weight-filtered when weight >= 0.
EntryBasis entry_basis(const StructAlgebra& a, const AbarBasis& abar, int k,
                       bool slot0_abar, int weight) {
  EntryBasis out;
  int d0 = slot0_abar ? abar.dim() : a.dim;
  Tuple t(k + 1);
  auto rec = [&](auto&& self, int slot, int used) -> void {
    if (slot == k + 1) {
      if (weight < 0 || used == weight) out.add(t);
      return;
    }
    int count = slot == 0 ? d0 : abar.dim();
    for (int i = 0; i < count; ++i) {
      int w = 0;
      if (weight >= 0)
        w = (slot == 0 && !slot0_abar) ? a.weights[i] : abar.weight(i);
      if (weight >= 0 && used + w > weight) continue;
      t[slot] = i;
      self(self, slot + 1, used + w);
    }
  };
  rec(rec, 0, 0);
  return out;
}

void put(const EntryBasis& target, const Tuple& t, const Rat& c, QVec& out) {
  auto it = target.index.find(t);
  if (it != target.index.end()) out.axpy(c, QVec::unit(it->second));
}

// scatter a term with vectors in slot 0 and one Ā slot (vslot < 0: none)
void emit(const EntryBasis& target, Tuple pat, const QVec& slot0, int vslot,
          const QVec& vvec, const Rat& sign, QVec& out) {
  for (const auto& [i0, c0] : slot0.entries()) {
    pat[0] = i0;
    if (vslot < 0) {
      put(target, pat, sign * c0, out);
    } else {
      for (const auto& [s, cs] : vvec.entries()) {
        pat[vslot] = s;
        put(target, pat, sign * c0 * cs, out);
      }
    }
  }
}

// Hochschild b on A⊗Ā^{⊗k} (regular bimodule coefficients); target may be
// the reduced diagonal, in which case slot 0 is projected to Ā.
QMat b_map(const StructAlgebra& a, const AbarBasis& abar, const EntryBasis& src, int k,
           const EntryBasis& dst, bool dst_diag_abar) {
  QMat d(dst.dim(), src.dim());
  for (int col = 0; col < src.dim(); ++col) {
    const Tuple& t = src.tuples[col];
    QVec out;
    auto slot0_vec = [&](QVec v) {
      return dst_diag_abar ? abar.project(v) : std::move(v);
    };
    {
      // d_0 : (a_0·a_1) ⊗ ā_2..ā_k
      Tuple pat(k);
      for (int s = 1; s < k; ++s) pat[s] = t[s + 1];
      QVec v = slot0_vec(a.mul_vec(QVec::unit(t[0]), abar.lift(t[1])));
      emit(dst, pat, v, -1, QVec(), Rat(1), out);
    }
    for (int i = 1; i < k; ++i) {
      Tuple pat(k);
      int q = 1;
      for (int s = 1; s <= k; ++s) {
        if (s == i + 1) continue;
        pat[q++] = t[s];
      }
      QVec prod = abar.project(a.mul_vec(abar.lift(t[i]), abar.lift(t[i + 1])));
      Rat sign((i % 2 == 0) ? 1 : -1);
      emit(dst, pat, slot0_vec(QVec::unit(t[0])), i, prod, sign, out);
    }
    {
      // d_k : (a_k·a_0) ⊗ ā_1..ā_{k-1}
      Tuple pat(k);
      for (int s = 1; s < k; ++s) pat[s] = t[s];
      QVec v = slot0_vec(a.mul_vec(abar.lift(t[k]), QVec::unit(t[0])));
      Rat sign((k % 2 == 0) ? 1 : -1);
      emit(dst, pat, v, -1, QVec(), sign, out);
    }
    for (const auto& [r, c] : out.entries()) d.add(r, col, c);
  }
  return d;
}

// Connes B on normalized chains: Σ_i (−1)^{ki} 1 ⊗ (rotation of
// ā_0..ā_k starting at i), ā_0 = π(a_0).
QMat connes_b(const StructAlgebra& a, const AbarBasis& abar, const EntryBasis& src, int k,
              bool src_diag_abar, const EntryBasis& dst) {
  QMat d(dst.dim(), src.dim());
  for (int col = 0; col < src.dim(); ++col) {
    const Tuple& t = src.tuples[col];
    QVec abar0 = src_diag_abar ? QVec::unit(t[0]) : abar.project(QVec::unit(t[0]));
    QVec out;
    for (int i = 0; i <= k; ++i) {
      // target slots 1..k+1: ā_i,…,ā_k, [ā_0], ā_1,…,ā_{i-1}
      Tuple pat(k + 2);
      int q = 1, vslot = -1;
      for (int s = i; s <= k; ++s) {
        if (s == 0) {
          vslot = q++;
        } else {
          pat[q++] = t[s];
        }
      }
      if (i > 0) {
        vslot = q++;
        for (int s = 1; s < i; ++s) pat[q++] = t[s];
      }
      Rat sign(((k * i) % 2 == 0) ? 1 : -1);
      emit(dst, pat, a.unit, vslot, abar0, sign, out);
    }
    for (const auto& [r, c] : out.entries()) d.add(r, col, c);
  }
  return d;
}

}  // namespace

DoubleComplex cyclic_bicomplex(const StructAlgebra& a, int max_n, bool reduced,
                               int weight) {
  a.validate();
  if (!a.unital) throw validation_error("cyclic_bicomplex: algebra must be unital");
  if (weight >= 0 && !a.graded())
    throw validation_error("cyclic_bicomplex: weight filter requires a graded algebra");
  AbarBasis abar(a);
  int N = max_n;
  std::vector<std::vector<EntryBasis>> entries(N + 1, std::vector<EntryBasis>(N + 1));
  auto diag_abar = [&](int n, int m) { return reduced && n == m; };
  for (int n = 0; n <= N; ++n)
    for (int m = n; m <= N; ++m)
      entries[n][m] = entry_basis(a, abar, m - n, diag_abar(n, m), weight);

  std::vector<std::vector<int>> dims(N + 1, std::vector<int>(N + 1, 0));
  std::vector<std::vector<QMat>> horiz(N + 1, std::vector<QMat>(N + 1));
  std::vector<std::vector<QMat>> vert(N + 1, std::vector<QMat>(N + 1));
  for (int n = 0; n <= N; ++n)
    for (int m = n; m <= N; ++m) dims[n][m] = entries[n][m].dim();
  for (int n = 0; n <= N; ++n)
    for (int m = n; m <= N; ++m) {
      int k = m - n;
      if (k >= 1) {
        QMat b = b_map(a, abar, entries[n][m], k, entries[n][m - 1], diag_abar(n, m - 1));
        // stored vertical carries (−1)^n so the squares commute; totalize
        // restores b + B
        vert[n][m] = (n % 2 == 0) ? b : b.scaled(Rat(-1));
      }
      if (n >= 1) {
        horiz[n][m] =
            connes_b(a, abar, entries[n][m], k, diag_abar(n, m), entries[n - 1][m]);
      }
    }
  return DoubleComplex(N, N, std::move(dims), std::move(horiz), std::move(vert));
}

std::vector<HomologyClassSpace> cyclic_homology(const StructAlgebra& a, int max_degree,
                                                bool reduced, int weight) {
  DoubleComplex d = cyclic_bicomplex(a, max_degree + 1, reduced, weight);
  return homology_q(totalize(d), 0, max_degree);
}

std::vector<HomologyClassSpace> cyclic_nonunital(const StructAlgebra& a, int max_degree,
                                                 int weight) {
  StructAlgebra ap = unitalize(a);
  return cyclic_homology(ap, max_degree, true, weight);
}

ChainComplexQ lambda_complex(const StructAlgebra& a, int max_degree, int weight) {
  a.validate();
  if (weight >= 0 && !a.graded())
    throw validation_error("lambda_complex: weight filter requires a graded algebra");
  int top = max_degree + 1;
  // tuple bases of A^{⊗(q+1)} per degree q
  std::vector<EntryBasis> full(top + 1);
  for (int q = 0; q <= top; ++q) {
    Tuple t(q + 1);
    auto rec = [&](auto&& self, int slot, int used) -> void {
      if (slot == q + 1) {
        if (weight < 0 || used == weight) full[q].add(t);
        return;
      }
      for (int i = 0; i < a.dim; ++i) {
        int w = weight >= 0 ? a.weights[i] : 0;
        if (weight >= 0 && used + w > weight) continue;
        t[slot] = i;
        self(self, slot + 1, used + w);
      }
    };
    rec(rec, 0, 0);
  }
  // coinvariant quotients by im(1 − t), t = (−1)^q rotation
  std::vector<QuotientMap> qmaps(top + 1);
  for (int q = 0; q <= top; ++q) {
    std::vector<QVec> rels;
    Rat sign((q % 2 == 0) ? 1 : -1);
    for (int col = 0; col < full[q].dim(); ++col) {
      const Tuple& t = full[q].tuples[col];
      Tuple rot(q + 1);
      rot[0] = t[q];
      for (int s = 1; s <= q; ++s) rot[s] = t[s - 1];
      QVec r = QVec::unit(col);
      r.axpy(-sign, QVec::unit(full[q].index.at(rot)));
      rels.push_back(r);
    }
    qmaps[q] = quotient_map(Subspace(full[q].dim(), rels));
  }
  std::vector<int> dims(top + 1);
  for (int q = 0; q <= top; ++q) dims[q] = qmaps[q].dim;
  std::vector<QMat> diffs(top + 1);
  for (int q = 1; q <= top; ++q) {
    // unnormalized b on the full tensor space
    QMat b(full[q - 1].dim(), full[q].dim());
    for (int col = 0; col < full[q].dim(); ++col) {
      const Tuple& t = full[q].tuples[col];
      QVec out;
      for (int i = 0; i < q; ++i) {
        Tuple pat(q);
        int p = 0;
        for (int s = 0; s <= q; ++s) {
          if (s == i + 1) continue;
          pat[p++] = t[s];
        }
        QVec prod = a.mul_vec(QVec::unit(t[i]), QVec::unit(t[i + 1]));
        Rat sign((i % 2 == 0) ? 1 : -1);
        for (const auto& [x, c] : prod.entries()) {
          pat[i] = x;
          put(full[q - 1], pat, sign * c, out);
        }
      }
      {
        Tuple pat(q);
        for (int s = 1; s < q; ++s) pat[s] = t[s];
        QVec prod = a.mul_vec(QVec::unit(t[q]), QVec::unit(t[0]));
        Rat sign((q % 2 == 0) ? 1 : -1);
        for (const auto& [x, c] : prod.entries()) {
          pat[0] = x;
          put(full[q - 1], pat, sign * c, out);
        }
      }
      for (const auto& [r, c] : out.entries()) b.add(r, col, c);
    }
    diffs[q] = qmaps[q - 1].projection * b * qmaps[q].section;
  }
  return ChainComplexQ(std::move(dims), std::move(diffs));
}

std::vector<HomologyClassSpace> lambda_homology(const StructAlgebra& a, int max_degree,
                                                int weight) {
  return homology_q(lambda_complex(a, max_degree, weight), 0, max_degree);
}

SbiResult sbi_sequence(const StructAlgebra& a, int max_degree, int weight) {
  int grid = max_degree + 2;
  DoubleComplex d = cyclic_bicomplex(a, grid, false, weight);
  ChainComplexQ tot = totalize(d);
  int top = tot.top_degree();
  // column 0 = the normalized Hochschild complex (A, b)
  std::vector<int> hdims(top + 1, 0);
  std::vector<QMat> hdiffs(top + 1);
  for (int j = 0; j <= d.max_j(); ++j) hdims[j] = d.dim(0, j);
  for (int j = 1; j <= top; ++j)
    hdiffs[j] = j <= d.max_j() ? d.vertical(0, j) : QMat(hdims[j - 1], hdims[j]);
  ChainComplexQ hoch(hdims, hdiffs);
  // quotient: summands with column index >= 1
  std::vector<int> qdims(top + 1, 0);
  std::vector<std::vector<int>> qoffset(top + 1);
  for (int n = 0; n <= top; ++n) {
    qoffset[n].assign(d.max_i() + 1, -1);
    for (int i = 1; i <= std::min(n, d.max_i()); ++i) {
      int j = n - i;
      if (j > d.max_j()) continue;
      qoffset[n][i] = qdims[n];
      qdims[n] += d.dim(i, j);
    }
  }
  std::vector<QMat> fmats(top + 1), gmats(top + 1), qdiffs(top + 1);
  for (int n = 0; n <= top; ++n) {
    fmats[n] = QMat(tot.dim(n), hdims[n]);
    if (n <= d.max_j()) {
      int off = d.total_offset(0, n);
      for (int r = 0; r < hdims[n]; ++r) fmats[n].set(off + r, r, Rat(1));
    }
    gmats[n] = QMat(qdims[n], tot.dim(n));
    for (int i = 1; i <= std::min(n, d.max_i()); ++i) {
      int j = n - i;
      if (j > d.max_j() || qoffset[n][i] < 0) continue;
      int toff = d.total_offset(i, j), qoff = qoffset[n][i];
      for (int r = 0; r < d.dim(i, j); ++r) gmats[n].set(qoff + r, toff + r, Rat(1));
    }
  }
  for (int n = 1; n <= top; ++n) {
    // dQ = g ∘ dTot restricted to the column >= 1 summands
    QMat section(tot.dim(n), qdims[n]);
    for (int i = 1; i <= std::min(n, d.max_i()); ++i) {
      int j = n - i;
      if (j > d.max_j() || qoffset[n][i] < 0) continue;
      int toff = d.total_offset(i, j), qoff = qoffset[n][i];
      for (int r = 0; r < d.dim(i, j); ++r) section.set(toff + r, qoff + r, Rat(1));
    }
    qdiffs[n] = gmats[n - 1] * tot.differential(n) * section;
  }
  ChainComplexQ quot(qdims, qdiffs);
  ChainMap f(&hoch, &tot, fmats);
  ChainMap g(&tot, &quot, gmats);
  SbiResult out;
  out.les = les_check(f, g, max_degree);
  out.exact = out.les.exact;
  for (int n = 0; n <= max_degree; ++n) {
    out.hh_dims.push_back(out.les.ha[n].dim);
    out.hc_dims.push_back(out.les.hb[n].dim);
  }
  out.shift_identified = true;
  for (int n = 0; n <= max_degree; ++n) {
    int expect = n >= 2 ? out.les.hb[n - 2].dim : 0;
    if (out.les.hc[n].dim != expect) out.shift_identified = false;
  }
  return out;
}

}  // namespace homcolim
