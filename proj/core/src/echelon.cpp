#include "homcolim/echelon.hpp"

#include <map>

namespace homcolim {

QVec Echelon::reduce(QVec v) const {
  while (!v.empty()) {
    auto it = pivot_row_.find(v.leading_index());
    if (it == pivot_row_.end()) break;
    Rat c = -v.leading_coeff();
    v.axpy(c, rows_[it->second]);
  }
  // Leading index only ever grows, but interior entries may still hit pivot
  // columns; clear them too so residuals are unique.
  bool again = true;
  while (again) {
    again = false;
    for (const auto& [j, c] : v.entries()) {
      auto it = pivot_row_.find(j);
      if (it != pivot_row_.end()) {
        Rat coeff = c;  // copy: axpy reallocates v's storage
        v.axpy(-coeff, rows_[it->second]);
        again = true;
        break;
      }
    }
  }
  return v;
}

std::pair<QVec, QVec> Echelon::reduce_tracked(QVec v) const {
  QVec combo;
  bool again = true;
  while (again) {
    again = false;
    for (const auto& [j, c] : v.entries()) {
      auto it = pivot_row_.find(j);
      if (it != pivot_row_.end()) {
        Rat coeff = c;  // copy: axpy reallocates v's storage
        v.axpy(-coeff, rows_[it->second]);
        if (track_) combo.axpy(coeff, combos_[it->second]);
        again = true;
        break;
      }
    }
  }
  return {std::move(v), std::move(combo)};
}

bool Echelon::insert(QVec v) {
  QVec combo = QVec::unit(inserted_);
  ++inserted_;
  while (!v.empty()) {
    auto it = pivot_row_.find(v.leading_index());
    if (it == pivot_row_.end()) break;
    Rat c = v.leading_coeff();
    v.axpy(-c, rows_[it->second]);
    if (track_) combo.axpy(-c, combos_[it->second]);
  }
  if (v.empty()) return false;
  Rat lead = v.leading_coeff();
  Rat inv = Rat(1) / lead;
  v.scale(inv);
  if (track_) combo.scale(inv);
  pivot_row_[v.leading_index()] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  if (track_) combos_.push_back(std::move(combo));
  return true;
}

std::vector<QVec> Echelon::canonical_rows() const {
  // Back-substitute in decreasing pivot order, then emit in increasing order.
  std::map<int, QVec> by_pivot;
  for (const auto& [col, idx] : pivot_row_) by_pivot[col] = rows_[idx];
  for (auto it = by_pivot.rbegin(); it != by_pivot.rend(); ++it) {
    for (auto jt = by_pivot.begin(); jt->first < it->first; ++jt) {
      Rat c = jt->second.at(it->first);
      if (c != 0) jt->second.axpy(-c, it->second);
    }
  }
  std::vector<QVec> out;
  out.reserve(by_pivot.size());
  for (auto& [col, row] : by_pivot) out.push_back(std::move(row));
  return out;
}

std::optional<QVec> Echelon::express(const QVec& v) const {
  auto [residual, combo] = reduce_tracked(v);
  if (!residual.empty()) return std::nullopt;
  return combo;
}

RrefResult rref(const QMat& m) {
  Echelon e(m.cols());
  for (int i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  RrefResult out;
  out.rank = e.rank();
  out.row_basis = e.canonical_rows();

  // Kernel from the canonical rows: one basis vector per free column, with a
  // 1 in the free column and the negated pivot-row entries above it. The
  // result is itself in reduced echelon form once sorted by free column.
  std::map<int, QVec> pivot_rows;
  for (const auto& r : out.row_basis) pivot_rows[r.leading_index()] = r;
  for (int j = 0; j < m.cols(); ++j) {
    if (pivot_rows.count(j)) continue;
    QVec k = QVec::unit(j);
    for (const auto& [p, row] : pivot_rows) {
      Rat c = row.at(j);
      if (c != 0) k.axpy(-c, QVec::unit(p));
    }
    out.kernel_basis.push_back(std::move(k));
  }
  return out;
}

int rank_of(const QMat& m) {
  Echelon e(m.cols());
  for (int i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e.rank();
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
  // Row-reduce the transpose with combination tracking: x * M^T = b.
  Echelon e(m.rows(), /*track=*/true);
  QMat t = m.transpose();
  for (int i = 0; i < t.rows(); ++i) e.insert(t.row(i));
  return e.express(b);
}

QMat inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw validation_error("inverse: matrix not square");
  QMat out(m.rows(), m.rows());
  for (int j = 0; j < m.rows(); ++j) {
    auto x = solve(m, QVec::unit(j));
    if (!x) throw validation_error("inverse: matrix is singular");
    for (const auto& [i, c] : x->entries()) out.set(i, j, c);
  }
  return out;
}

}  // namespace homcolim
