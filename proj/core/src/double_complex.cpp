#include "homcolim/double_complex.hpp"

namespace homcolim {

DoubleComplex::DoubleComplex(int max_i, int max_j,
                             std::vector<std::vector<int>> dims,
                             std::vector<std::vector<QMat>> horiz,
                             std::vector<std::vector<QMat>> vert)
    : max_i_(max_i), max_j_(max_j),
      dims_(std::move(dims)), horiz_(std::move(horiz)), vert_(std::move(vert)) {
  for (int i = 0; i <= max_i_; ++i)
    for (int j = 0; j <= max_j_; ++j) {
      if (horizontal(i, j).rows() != dim(i - 1, j) || horizontal(i, j).cols() != dim(i, j))
        throw validation_error("double complex: horizontal shape mismatch");
      if (vertical(i, j).rows() != dim(i, j - 1) || vertical(i, j).cols() != dim(i, j))
        throw validation_error("double complex: vertical shape mismatch");
      if (i >= 2 && !(horizontal(i - 1, j) * horizontal(i, j)).is_zero())
        throw validation_error("double complex: h∘h != 0");
      if (j >= 2 && !(vertical(i, j - 1) * vertical(i, j)).is_zero())
        throw validation_error("double complex: v∘v != 0");
      // commuting squares: h v == v h
      if (i >= 1 && j >= 1 &&
          !(horizontal(i, j - 1) * vertical(i, j) == vertical(i - 1, j) * horizontal(i, j)))
        throw validation_error("double complex: squares do not commute");
    }
}

QMat DoubleComplex::horizontal(int i, int j) const {
  // A 0x0 stored matrix stands for "omitted": treated as the zero map.
  if (i >= 1 && i <= max_i_ && j >= 0 && j <= max_j_) {
    const QMat& m = horiz_[i][j];
    if (m.rows() != 0 || m.cols() != 0) return m;
  }
  return QMat(dim(i - 1, j), dim(i, j));
}

QMat DoubleComplex::vertical(int i, int j) const {
  if (j >= 1 && j <= max_j_ && i >= 0 && i <= max_i_) {
    const QMat& m = vert_[i][j];
    if (m.rows() != 0 || m.cols() != 0) return m;
  }
  return QMat(dim(i, j - 1), dim(i, j));
}

int DoubleComplex::total_offset(int i, int j) const {
  int n = i + j, off = 0;
  for (int k = 0; k < i; ++k)
    if (n - k >= 0 && n - k <= max_j_ && k <= max_i_) off += dim(k, n - k);
  return off;
}

int DoubleComplex::total_dim(int n) const {
  int s = 0;
  for (int i = 0; i <= std::min(n, max_i_); ++i)
    if (n - i <= max_j_) s += dim(i, n - i);
  return s;
}

ChainComplexQ totalize(const DoubleComplex& d) {
  int top = d.max_i() + d.max_j();
  std::vector<int> dims(top + 1, 0);
  for (int n = 0; n <= top; ++n) dims[n] = d.total_dim(n);
  std::vector<QMat> diffs;
  diffs.push_back(QMat());
  for (int n = 1; n <= top; ++n) {
    QMat dn(dims[n - 1], dims[n]);
    for (int i = 0; i <= std::min(n, d.max_i()); ++i) {
      int j = n - i;
      if (j > d.max_j() || d.dim(i, j) == 0) continue;
      int src = d.total_offset(i, j);
      // horizontal block into (i-1, j)
      if (i >= 1 && d.dim(i - 1, j) > 0) {
        QMat h = d.horizontal(i, j);
        int dst = d.total_offset(i - 1, j);
        for (int r = 0; r < h.rows(); ++r)
          for (const auto& [c, val] : h.row(r).entries()) dn.add(dst + r, src + c, val);
      }
      // vertical block into (i, j-1) with the (-1)^i twist
      if (j >= 1 && d.dim(i, j - 1) > 0) {
        QMat v = d.vertical(i, j);
        int dst = d.total_offset(i, j - 1);
        Rat sign = (i % 2 == 0) ? Rat(1) : Rat(-1);
        for (int r = 0; r < v.rows(); ++r)
          for (const auto& [c, val] : v.row(r).entries()) dn.add(dst + r, src + c, sign * val);
      }
    }
    diffs.push_back(std::move(dn));
  }
  return ChainComplexQ(std::move(dims), std::move(diffs));
}

DoubleComplex transpose(const DoubleComplex& d) {
  std::vector<std::vector<int>> dims(d.max_j() + 1, std::vector<int>(d.max_i() + 1, 0));
  std::vector<std::vector<QMat>> horiz(d.max_j() + 1, std::vector<QMat>(d.max_i() + 1));
  std::vector<std::vector<QMat>> vert(d.max_j() + 1, std::vector<QMat>(d.max_i() + 1));
  for (int i = 0; i <= d.max_j(); ++i)
    for (int j = 0; j <= d.max_i(); ++j) {
      dims[i][j] = d.dim(j, i);
      horiz[i][j] = d.vertical(j, i);
      vert[i][j] = d.horizontal(j, i);
    }
  return DoubleComplex(d.max_j(), d.max_i(), std::move(dims), std::move(horiz), std::move(vert));
}

}  // namespace homcolim
