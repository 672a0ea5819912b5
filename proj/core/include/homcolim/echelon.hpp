#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "homcolim/matrix.hpp"

namespace homcolim {

// Incremental row echelon over ℚ with sparse rows. Optionally tracks, for
// every stored row, its expression as a combination of the inserted rows
// (used to express vectors in a row space).
class Echelon {
 public:
  explicit Echelon(int ncols, bool track_combinations = false)
      : ncols_(ncols), track_(track_combinations) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces v against the current rows; returns the residual.
  QVec reduce(QVec v) const;
  // Residual together with the combination of previously inserted vectors
  // that was subtracted (only meaningful with tracking on).
  std::pair<QVec, QVec> reduce_tracked(QVec v) const;

  // Inserts v; returns true iff the rank grew. Counts every call as an
  // inserted vector for combination tracking.
  bool insert(QVec v);

  bool contains(const QVec& v) const { return reduce(v).empty(); }

  // Fully reduced canonical basis: pivots increasing, leading coefficient 1,
  // pivot columns cleared above. Deterministic, so equal row spaces produce
  // identical output.
  std::vector<QVec> canonical_rows() const;

  // Solves x * M = v where M has the inserted vectors as rows; returns the
  // coefficient vector x on success (requires tracking).
  std::optional<QVec> express(const QVec& v) const;

 private:
  int ncols_;
  bool track_;
  int inserted_ = 0;
  std::vector<QVec> rows_;          // one pivot column each, normalized lead 1
  std::vector<QVec> combos_;        // rows_[i] = combos_[i] * (inserted vectors)
  std::unordered_map<int, int> pivot_row_;  // pivot column -> row index
};

struct RrefResult {
  int rank = 0;
  std::vector<QVec> row_basis;     // canonical reduced echelon rows
  std::vector<QVec> kernel_basis;  // canonical basis of the right kernel
};

// Row space and right kernel {x : M x = 0} of a rational matrix.
RrefResult rref(const QMat& m);

int rank_of(const QMat& m);

// Solves M x = b; returns a particular solution or nullopt.
std::optional<QVec> solve(const QMat& m, const QVec& b);

// Inverse of a square rational matrix; throws on singular input.
QMat inverse(const QMat& m);

}  // namespace homcolim
