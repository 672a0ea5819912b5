#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "homcolim/scalar.hpp"

namespace homcolim {

// Sparse vector: sorted (index, nonzero coefficient) pairs.
template <typename K>
class SparseVec {
 public:
  using Entry = std::pair<int, K>;

  SparseVec() = default;
  explicit SparseVec(std::vector<Entry> entries) : entries_(std::move(entries)) {
    normalize();
  }

  static SparseVec unit(int index) { return SparseVec({{index, K(1)}}); }

  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  int leading_index() const { return entries_.front().first; }
  const K& leading_coeff() const { return entries_.front().second; }

  K at(int index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, int i) { return e.first < i; });
    return (it != entries_.end() && it->first == index) ? it->second : K(0);
  }

  void push_back_unchecked(int index, K coeff) {
    entries_.emplace_back(index, std::move(coeff));
  }
  // Restores the invariant after a run of push_back_unchecked with
  // possibly unsorted / duplicate / zero entries.
  void normalize() {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (auto& e : entries_) {
      if (!out.empty() && out.back().first == e.first) {
        out.back().second += e.second;
        if (out.back().second == 0) out.pop_back();
      } else if (e.second != 0) {
        out.push_back(std::move(e));
      }
    }
    entries_ = std::move(out);
  }

  // this += c * other
  void axpy(const K& c, const SparseVec& other) {
    if (c == 0 || other.empty()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() ||
          (a != entries_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == entries_.end() || b->first < a->first) {
        out.emplace_back(b->first, c * b->second);
        ++b;
      } else {
        K v = a->second + c * b->second;
        if (v != 0) out.emplace_back(a->first, std::move(v));
        ++a;
        ++b;
      }
    }
    entries_ = std::move(out);
  }

  void scale(const K& c) {
    if (c == 0) {
      entries_.clear();
      return;
    }
    for (auto& e : entries_) e.second *= c;
  }

  SparseVec shifted(int offset) const {
    SparseVec out;
    out.entries_.reserve(entries_.size());
    for (const auto& e : entries_) out.entries_.emplace_back(e.first + offset, e.second);
    return out;
  }

  K dot(const SparseVec& other) const {
    K acc(0);
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
      if (a->first < b->first) ++a;
      else if (b->first < a->first) ++b;
      else { acc += a->second * b->second; ++a; ++b; }
    }
    return acc;
  }

  bool operator==(const SparseVec& other) const { return entries_ == other.entries_; }

 private:
  std::vector<Entry> entries_;
};

// Sparse row-major exact matrix. Rows/cols may be zero; a 0xN or Nx0 matrix
// is legal. Acts on column vectors: (M x)_i = sum_j M(i,j) x_j.
template <typename K>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw validation_error("matrix: negative shape");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i] = SparseVec<K>::unit(i);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const SparseVec<K>& row(int i) const { return data_[i]; }
  SparseVec<K>& row(int i) { return data_[i]; }
  void set_row(int i, SparseVec<K> v) { data_[i] = std::move(v); }

  void set(int i, int j, K v) {
    // Triplet-style assembly helper; callers normalize via set once per entry.
    SparseVec<K> upd;
    upd.push_back_unchecked(j, std::move(v) - data_[i].at(j));
    upd.normalize();
    data_[i].axpy(K(1), upd);
  }
  void add(int i, int j, const K& v) {
    SparseVec<K> upd;
    upd.push_back_unchecked(j, v);
    upd.normalize();
    data_[i].axpy(K(1), upd);
  }

  K at(int i, int j) const { return data_[i].at(j); }

  bool is_zero() const {
    for (const auto& r : data_)
      if (!r.empty()) return false;
    return true;
  }

  SparseVec<K> apply(const SparseVec<K>& x) const {
    SparseVec<K> out;
    for (int i = 0; i < rows_; ++i) {
      K v = data_[i].dot(x);
      if (v != 0) out.push_back_unchecked(i, std::move(v));
    }
    return out;  // already sorted, nonzero
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i].entries()) t.data_[j].push_back_unchecked(i, v);
    return t;  // column order of pushes is increasing i: rows stay sorted
  }

  Mat operator*(const Mat& other) const {
    if (cols_ != other.rows_) throw validation_error("matrix product: shape mismatch");
    Mat out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
      SparseVec<K> acc;
      for (const auto& [k, v] : data_[i].entries()) acc.axpy(v, other.data_[k]);
      out.data_[i] = std::move(acc);
    }
    return out;
  }

  Mat operator+(const Mat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw validation_error("matrix sum: shape mismatch");
    Mat out = *this;
    for (int i = 0; i < rows_; ++i) out.data_[i].axpy(K(1), other.data_[i]);
    return out;
  }

  Mat scaled(const K& c) const {
    Mat out = *this;
    for (auto& r : out.data_) r.scale(c);
    return out;
  }

  bool operator==(const Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  // Kronecker product, row-major index convention:
  // (i1, i2) -> i1 * other.rows + i2, (j1, j2) -> j1 * other.cols + j2.
  Mat kron(const Mat& other) const {
    Mat out(rows_ * other.rows_, cols_ * other.cols_);
    for (int i1 = 0; i1 < rows_; ++i1)
      for (int i2 = 0; i2 < other.rows_; ++i2) {
        SparseVec<K>& r = out.data_[i1 * other.rows_ + i2];
        for (const auto& [j1, v1] : data_[i1].entries())
          for (const auto& [j2, v2] : other.data_[i2].entries())
            r.push_back_unchecked(j1 * other.cols_ + j2, v1 * v2);
        r.normalize();
      }
    return out;
  }

  // Stacks rows of `other` below this matrix.
  Mat vstack(const Mat& other) const {
    if (cols_ != other.cols_) throw validation_error("vstack: column mismatch");
    Mat out(rows_ + other.rows_, cols_);
    for (int i = 0; i < rows_; ++i) out.data_[i] = data_[i];
    for (int i = 0; i < other.rows_; ++i) out.data_[rows_ + i] = other.data_[i];
    return out;
  }

 private:
  int rows_, cols_;
  std::vector<SparseVec<K>> data_;
};

using QVec = SparseVec<Rat>;
using ZVec = SparseVec<Int>;
using QMat = Mat<Rat>;
using ZMat = Mat<Int>;

QMat to_rational(const ZMat& m);

}  // namespace homcolim
