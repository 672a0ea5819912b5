#include "homcolim/snf.hpp"

#include <algorithm>

namespace homcolim {
namespace {

// Dense working form; the matrices here are small by the time SNF runs.
struct Dense {
  int rows, cols;
  std::vector<Int> a;
  Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }
};

Dense to_dense(const ZMat& m) {
  Dense d{m.rows(), m.cols(), std::vector<Int>(size_t(m.rows()) * m.cols(), Int(0))};
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i).entries()) d.at(i, j) = v;
  return d;
}

ZMat from_dense(const Dense& d) {
  ZMat m(d.rows, d.cols);
  for (int i = 0; i < d.rows; ++i)
    for (int j = 0; j < d.cols; ++j)
      if (d.at(i, j) != 0) m.set(i, j, d.at(i, j));
  return m;
}

struct Work {
  Dense d, u, v, vinv;

  void swap_rows(int i, int k) {
    if (i == k) return;
    for (int j = 0; j < d.cols; ++j) std::swap(d.at(i, j), d.at(k, j));
    for (int j = 0; j < u.cols; ++j) std::swap(u.at(i, j), u.at(k, j));
  }
  void swap_cols(int j, int k) {
    if (j == k) return;
    for (int i = 0; i < d.rows; ++i) std::swap(d.at(i, j), d.at(i, k));
    for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, j), v.at(i, k));
    for (int l = 0; l < vinv.cols; ++l) std::swap(vinv.at(j, l), vinv.at(k, l));
  }
  // row i -= q * row k
  void row_axpy(int i, int k, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < d.cols; ++j) d.at(i, j) -= q * d.at(k, j);
    for (int j = 0; j < u.cols; ++j) u.at(i, j) -= q * u.at(k, j);
  }
  // col j -= q * col k; V picks up the same column op, V^-1 the inverse row op.
  void col_axpy(int j, int k, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < d.rows; ++i) d.at(i, j) -= q * d.at(i, k);
    for (int i = 0; i < v.rows; ++i) v.at(i, j) -= q * v.at(i, k);
    for (int l = 0; l < vinv.cols; ++l) vinv.at(k, l) += q * vinv.at(j, l);
  }

  // Gaussian elimination over ℤ with smallest-absolute-value pivots;
  // leaves d diagonal (not yet divisibility-ordered). Returns the number of
  // nonzero diagonal entries.
  int diagonalize() {
    int R = d.rows, C = d.cols, bound = std::min(R, C);
    int t = 0;
    while (t < bound) {
      int pi = -1, pj = -1;
      for (int i = t; i < R; ++i)
        for (int j = t; j < C; ++j) {
          const Int& x = d.at(i, j);
          if (x == 0) continue;
          if (pi < 0 || cmp(abs(x), abs(d.at(pi, pj))) < 0) { pi = i; pj = j; }
        }
      if (pi < 0) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = false;
      while (!clean) {
        clean = true;
        for (int i = t + 1; i < R; ++i) {
          if (d.at(i, t) == 0) continue;
          Int q = d.at(i, t) / d.at(t, t);
          row_axpy(i, t, q);
          if (d.at(i, t) != 0) {  // nonzero remainder: smaller pivot found
            swap_rows(t, i);
            clean = false;
          }
        }
        for (int j = t + 1; j < C; ++j) {
          if (d.at(t, j) == 0) continue;
          Int q = d.at(t, j) / d.at(t, t);
          col_axpy(j, t, q);
          if (d.at(t, j) != 0) {
            swap_cols(t, j);
            clean = false;
          }
        }
      }
      ++t;
    }
    return t;
  }
};

}  // namespace

SnfResult snf(const ZMat& m) {
  int R = m.rows(), C = m.cols();
  Work w{to_dense(m), to_dense(ZMat::identity(R)), to_dense(ZMat::identity(C)),
         to_dense(ZMat::identity(C))};

  int t = w.diagonalize();
  // Divisibility chain: fold any violating pair back into the matrix and
  // rediagonalize; the smallest-pivot strategy then produces the gcd first.
  for (;;) {
    int bad = -1;
    for (int i = 0; i + 1 < t; ++i)
      if (w.d.at(i + 1, i + 1) % w.d.at(i, i) != 0) { bad = i; break; }
    if (bad < 0) break;
    w.col_axpy(bad, bad + 1, Int(-1));  // col bad += col bad+1
    t = w.diagonalize();
  }

  for (int i = 0; i < t; ++i)
    if (w.d.at(i, i) < 0) {
      w.d.at(i, i) = -w.d.at(i, i);
      for (int j = 0; j < R; ++j) w.u.at(i, j) = -w.u.at(i, j);
    }

  SnfResult out;
  for (int i = 0; i < t; ++i)
    if (w.d.at(i, i) != 0) out.invariant_factors.push_back(w.d.at(i, i));
  out.u = from_dense(w.u);
  out.v = from_dense(w.v);
  out.v_inv = from_dense(w.vinv);

  ZMat check = out.u * m * out.v;
  ZMat diag(R, C);
  for (size_t i = 0; i < out.invariant_factors.size(); ++i)
    diag.set(static_cast<int>(i), static_cast<int>(i), out.invariant_factors[i]);
  check_internal(check == diag, "snf: U*M*V != D");
  check_internal(out.v * out.v_inv == ZMat::identity(C), "snf: V * V^-1 != I");
  for (size_t i = 1; i < out.invariant_factors.size(); ++i)
    check_internal(out.invariant_factors[i] % out.invariant_factors[i - 1] == 0,
                   "snf: divisibility chain broken");
  return out;
}

}  // namespace homcolim
