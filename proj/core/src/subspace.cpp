#include "homcolim/subspace.hpp"

#include <sstream>

namespace homcolim {

Subspace::Subspace(int ambient_dim, const std::vector<QVec>& spanning_vectors)
    : ambient_(ambient_dim) {
  Echelon e(ambient_dim);
  for (const auto& v : spanning_vectors) e.insert(v);
  basis_ = e.canonical_rows();
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_.reserve(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) s.basis_.push_back(QVec::unit(i));
  return s;
}

bool Subspace::contains(const QVec& v) const {
  Echelon e(ambient_);
  for (const auto& b : basis_) e.insert(b);
  return e.contains(v);
}

bool Subspace::contains(const Subspace& other) const {
  return !witness_outside(other).has_value();
}

std::optional<QVec> Subspace::witness_outside(const Subspace& other) const {
  Echelon e(ambient_);
  for (const auto& b : basis_) e.insert(b);
  for (const auto& v : other.basis_)
    if (!e.contains(v)) return v;
  return std::nullopt;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw validation_error("subspace_sum: ambient dimension mismatch");
  Echelon e(a.ambient_dim());
  for (const auto& v : a.basis()) e.insert(v);
  for (const auto& v : b.basis()) e.insert(v);
  Subspace out(a.ambient_dim());
  out = Subspace(a.ambient_dim(), e.canonical_rows());
  return out;
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw validation_error("subspace_intersect: ambient dimension mismatch");
  // Kernel of (u, v) -> u*A - v*B; the intersection is {u*A}.
  int da = a.dim(), db = b.dim();
  QMat m(da + db, a.ambient_dim());
  for (int i = 0; i < da; ++i) m.set_row(i, a.basis()[i]);
  for (int i = 0; i < db; ++i) {
    QVec v = b.basis()[i];
    v.scale(Rat(-1));
    m.set_row(da + i, std::move(v));
  }
  RrefResult r = rref(m.transpose());
  std::vector<QVec> vectors;
  for (const auto& k : r.kernel_basis) {
    QVec x;
    for (const auto& [idx, c] : k.entries())
      if (idx < da) x.axpy(c, a.basis()[idx]);
    if (!x.empty()) vectors.push_back(std::move(x));
  }
  return Subspace(a.ambient_dim(), vectors);
}

int quotient_dim(const Subspace& big, const Subspace& small) {
  if (big.ambient_dim() != small.ambient_dim())
    throw validation_error("quotient_dim: ambient dimension mismatch");
  if (auto w = big.witness_outside(small)) {
    std::ostringstream os;
    os << "quotient_dim: small subspace not contained in big; witness vector:";
    for (const auto& [i, c] : w->entries())
      os << " [" << i << "]=" << format_rational(c);
    throw validation_error(os.str());
  }
  return big.dim() - small.dim();
}

QuotientMap quotient_map(const Subspace& rel) {
  int n = rel.ambient_dim();
  std::vector<bool> pivot(n, false);
  for (const QVec& r : rel.basis()) pivot[r.leading_index()] = true;
  QuotientMap out;
  for (int j = 0; j < n; ++j)
    if (!pivot[j]) ++out.dim;
  out.projection = QMat(out.dim, n);
  out.section = QMat(n, out.dim);
  int row = 0;
  for (int j = 0; j < n; ++j) {
    if (pivot[j]) continue;
    out.section.set(j, row, Rat(1));
    ++row;
  }
  for (int j = 0; j < n; ++j) {
    QVec v = QVec::unit(j);
    for (const QVec& r : rel.basis()) {
      Rat c = v.at(r.leading_index());
      if (c != 0) v.axpy(-c, r);
    }
    int rr = 0;
    for (int k = 0; k < n; ++k) {
      if (pivot[k]) continue;
      Rat c = v.at(k);
      if (c != 0) out.projection.set(rr, j, c);
      ++rr;
    }
  }
  return out;
}

}  // namespace homcolim
