#include "homcolim/chain_complex.hpp"

namespace homcolim {

template <typename K>
void ChainComplexT<K>::validate() {
  int top = top_degree();
  for (int n = 0; n <= top; ++n)
    if (dims_[n] < 0) throw validation_error("chain complex: negative dimension");
  for (int n = 1; n < static_cast<int>(diffs_.size()); ++n) {
    const Mat<K>& d = diffs_[n];
    if (d.rows() != dim(n - 1) || d.cols() != dim(n))
      throw validation_error("chain complex: differential shape mismatch at degree " +
                             std::to_string(n));
  }
  for (int n = 2; n < static_cast<int>(diffs_.size()); ++n) {
    if ((diffs_[n - 1] * diffs_[n]).is_zero()) continue;
    throw validation_error("chain complex: d∘d != 0 at degree " + std::to_string(n));
  }
}

template class ChainComplexT<Rat>;
template class ChainComplexT<Int>;

Subspace cycles(const ChainComplexQ& c, int n) {
  if (c.dim(n) == 0) return Subspace(0);
  RrefResult r = rref(c.differential(n));
  return Subspace(c.dim(n), r.kernel_basis);
}

Subspace boundaries(const ChainComplexQ& c, int n) {
  QMat d = c.differential(n + 1);
  QMat t = d.transpose();  // rows span the image
  std::vector<QVec> rows;
  rows.reserve(t.rows());
  for (int i = 0; i < t.rows(); ++i) rows.push_back(t.row(i));
  return Subspace(c.dim(n), rows);
}

std::vector<HomologyClassSpace> homology_q(const ChainComplexQ& c, int from, int to) {
  std::vector<HomologyClassSpace> out;
  for (int n = std::max(0, from); n <= to; ++n) {
    HomologyClassSpace h;
    h.degree = n;
    Subspace z = n == 0 ? Subspace::full(c.dim(0)) : cycles(c, n);
    // Representatives: first echelon kernel vectors independent of the
    // boundary span, inserted in canonical order.
    Echelon e(c.dim(n));
    QMat bt = c.differential(n + 1).transpose();
    for (int i = 0; i < bt.rows(); ++i) e.insert(bt.row(i));
    int boundary_rank = e.rank();
    for (const auto& v : z.basis())
      if (e.insert(v)) h.representatives.push_back(v);
    h.dim = z.dim() - boundary_rank;
    check_internal(h.dim == static_cast<int>(h.representatives.size()),
                   "homology_q: representative count mismatch");
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<HomologyClassSpace> homology_z(const ChainComplexZ& c, int from, int to) {
  std::vector<HomologyClassSpace> out;
  for (int n = std::max(0, from); n <= to; ++n) {
    HomologyClassSpace h;
    h.degree = n;
    int dn = c.dim(n);
    if (dn == 0) { out.push_back(std::move(h)); continue; }

    // Integer kernel lattice of d_n: columns of V past the rank, a basis of
    // the saturated kernel sublattice since V is unimodular.
    ZMat d = c.differential(n);
    SnfResult s = snf(d);
    int r = static_cast<int>(s.invariant_factors.size());
    int k = dn - r;  // kernel rank
    // Coordinates of x in the kernel basis are rows r.. of V^-1 x.
    // Image of d_{n+1} expressed in those coordinates:
    ZMat dnext = c.differential(n + 1);
    ZMat coords = s.v_inv * dnext;  // dn x dim(n+1)
    ZMat img(k, dnext.cols());
    for (int i = 0; i < k; ++i) img.set_row(i, coords.row(r + i));
    // Rows 0..r-1 of coords must vanish: the image consists of cycles.
    for (int i = 0; i < r; ++i)
      check_internal(coords.row(i).empty(), "homology_z: boundary is not a cycle");

    SnfResult q = snf(img);
    int imrank = static_cast<int>(q.invariant_factors.size());
    h.dim = k - imrank;
    for (const auto& f : q.invariant_factors)
      if (f > 1) h.torsion.push_back(f);
    // Representatives: kernel lattice basis (integral cycles) as ℚ vectors.
    ZMat vt = s.v.transpose();
    for (int i = 0; i < k; ++i) {
      QVec rep;
      for (const auto& [j, val] : vt.row(r + i).entries())
        rep.push_back_unchecked(j, Rat(val));
      h.representatives.push_back(std::move(rep));
    }
    out.push_back(std::move(h));
  }
  return out;
}

ChainComplexQ tensor_to_q(const ChainComplexZ& c) {
  std::vector<int> dims;
  std::vector<QMat> diffs;
  for (int n = 0; n <= c.top_degree(); ++n) dims.push_back(c.dim(n));
  diffs.push_back(QMat());
  for (int n = 1; n <= c.top_degree(); ++n) diffs.push_back(to_rational(c.differential(n)));
  return ChainComplexQ(std::move(dims), std::move(diffs));
}

}  // namespace homcolim
