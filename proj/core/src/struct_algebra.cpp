#include "homcolim/struct_algebra.hpp"

#include "homcolim/echelon.hpp"

namespace homcolim {

QVec StructAlgebra::mul_vec(const QVec& x, const QVec& y) const {
  QVec out;
  for (const auto& [i, ci] : x.entries())
    for (const auto& [j, cj] : y.entries()) out.axpy(ci * cj, prod[i][j]);
  return out;
}

void StructAlgebra::validate() const {
  if (dim < 0) throw validation_error("algebra: negative dimension");
  if (static_cast<int>(prod.size()) != dim)
    throw validation_error("algebra: structure constant table size mismatch");
  for (const auto& row : prod) {
    if (static_cast<int>(row.size()) != dim)
      throw validation_error("algebra: structure constant table not square");
    for (const QVec& v : row)
      for (const auto& [k, c] : v.entries())
        if (k >= dim) throw validation_error("algebra: product entry out of range");
  }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        QVec lhs = mul_vec(prod[i][j], QVec::unit(k));
        QVec rhs = mul_vec(QVec::unit(i), prod[j][k]);
        if (!(lhs == rhs))
          throw validation_error("algebra: associativity fails at (" + std::to_string(i) +
                                 "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
  if (unital) {
    for (int i = 0; i < dim; ++i) {
      QVec e = QVec::unit(i);
      if (!(mul_vec(unit, e) == e) || !(mul_vec(e, unit) == e))
        throw validation_error("algebra: unit law fails");
    }
  }
  if (graded()) {
    if (static_cast<int>(weights.size()) != dim)
      throw validation_error("algebra: one weight per basis element");
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (const auto& [k, c] : prod[i][j].entries())
          if (weights[k] != weights[i] + weights[j])
            throw validation_error("algebra: multiplication breaks the grading");
    if (unital)
      for (const auto& [k, c] : unit.entries())
        if (weights[k] != 0) throw validation_error("algebra: unit must be weight 0");
  }
}

StructAlgebra unitalize(const StructAlgebra& a) {
  StructAlgebra out;
  out.dim = a.dim + 1;
  out.unital = true;
  out.unit = QVec::unit(0);
  out.prod.assign(out.dim, std::vector<QVec>(out.dim));
  for (int i = 0; i < out.dim; ++i)
    for (int j = 0; j < out.dim; ++j) {
      if (i == 0) {
        out.prod[i][j] = QVec::unit(j);
      } else if (j == 0) {
        out.prod[i][j] = QVec::unit(i);
      } else {
        out.prod[i][j] = a.prod[i - 1][j - 1].shifted(1);
      }
    }
  if (a.graded()) {
    out.weights.push_back(0);
    out.weights.insert(out.weights.end(), a.weights.begin(), a.weights.end());
  }
  return out;
}

StructAlgebra from_graded(const IGradedAlgebra& a, int truncation) {
  StructAlgebra out;
  std::vector<std::pair<int, int>> basis;  // (weight, index within weight)
  std::vector<int> offset(truncation + 2, 0);
  for (int w = 1; w <= truncation; ++w) {
    offset[w] = out.dim;
    for (int i = 0; i < a.dim(w); ++i) {
      basis.emplace_back(w, i);
      out.weights.push_back(w);
      ++out.dim;
    }
  }
  offset[truncation + 1] = out.dim;
  out.prod.assign(out.dim, std::vector<QVec>(out.dim));
  for (int i = 0; i < out.dim; ++i)
    for (int j = 0; j < out.dim; ++j) {
      auto [w1, i1] = basis[i];
      auto [w2, i2] = basis[j];
      if (w1 + w2 > truncation) continue;  // truncated to zero
      out.prod[i][j] = a.mul(w1, i1, w2, i2).shifted(offset[w1 + w2]);
    }
  return out;
}

StructAlgebra ground_field() {
  StructAlgebra a;
  a.dim = 1;
  a.prod = {{QVec::unit(0)}};
  a.unital = true;
  a.unit = QVec::unit(0);
  return a;
}

StructAlgebra dual_numbers() {
  StructAlgebra a;
  a.dim = 2;
  a.prod.assign(2, std::vector<QVec>(2));
  a.prod[0][0] = QVec::unit(0);
  a.prod[0][1] = QVec::unit(1);
  a.prod[1][0] = QVec::unit(1);
  a.prod[1][1] = QVec();
  a.unital = true;
  a.unit = QVec::unit(0);
  return a;
}

StructAlgebra product_of_fields() {
  StructAlgebra a;
  a.dim = 2;
  a.prod.assign(2, std::vector<QVec>(2));
  a.prod[0][0] = QVec::unit(0);
  a.prod[1][1] = QVec::unit(1);
  a.unital = true;
  a.unit = QVec::unit(0);
  a.unit.axpy(Rat(1), QVec::unit(1));
  return a;
}

StructAlgebra zero_mult_algebra(int d) {
  StructAlgebra a;
  a.dim = d;
  a.prod.assign(d, std::vector<QVec>(d));
  return a;
}

QVec Bimodule::act_left(const QVec& a, const QVec& m) const {
  QVec out;
  for (const auto& [i, c] : a.entries()) {
    QVec t = left[i].apply(m);
    out.axpy(c, t);
  }
  return out;
}

QVec Bimodule::act_right(const QVec& m, const QVec& a) const {
  QVec out;
  for (const auto& [i, c] : a.entries()) {
    QVec t = right[i].apply(m);
    out.axpy(c, t);
  }
  return out;
}

void Bimodule::validate() const {
  check_internal(alg != nullptr, "bimodule: algebra not set");
  const StructAlgebra& a = *alg;
  if (static_cast<int>(left.size()) != a.dim || static_cast<int>(right.size()) != a.dim)
    throw validation_error("bimodule: one action matrix per basis element");
  for (int i = 0; i < a.dim; ++i)
    if (left[i].rows() != dim || left[i].cols() != dim || right[i].rows() != dim ||
        right[i].cols() != dim)
      throw validation_error("bimodule: action matrix shape mismatch");
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < dim; ++k) {
        QVec m = QVec::unit(k);
        // (e_i e_j)·m = e_i·(e_j·m), m·(e_i e_j) = (m·e_i)·e_j,
        // (e_i·m)·e_j = e_i·(m·e_j)
        if (!(act_left(a.prod[i][j], m) == left[i].apply(left[j].apply(m))))
          throw validation_error("bimodule: left action not associative");
        if (!(act_right(m, a.prod[i][j]) == right[j].apply(right[i].apply(m))))
          throw validation_error("bimodule: right action not associative");
        if (!(right[j].apply(left[i].apply(m)) == left[i].apply(right[j].apply(m))))
          throw validation_error("bimodule: left and right actions do not commute");
      }
  if (a.unital)
    for (int k = 0; k < dim; ++k) {
      QVec m = QVec::unit(k);
      if (!(act_left(a.unit, m) == m) || !(act_right(m, a.unit) == m))
        throw validation_error("bimodule: unit must act as identity");
    }
  if (!weights.empty()) {
    if (static_cast<int>(weights.size()) != dim)
      throw validation_error("bimodule: one weight per basis element");
    if (!a.graded()) throw validation_error("bimodule: graded module over ungraded algebra");
    for (int i = 0; i < a.dim; ++i)
      for (int k = 0; k < dim; ++k) {
        QVec lk = left[i].apply(QVec::unit(k));
        QVec rk = right[i].apply(QVec::unit(k));
        for (const auto& [l, c] : lk.entries())
          if (weights[l] != a.weights[i] + weights[k])
            throw validation_error("bimodule: left action breaks the grading");
        for (const auto& [l, c] : rk.entries())
          if (weights[l] != a.weights[i] + weights[k])
            throw validation_error("bimodule: right action breaks the grading");
      }
  }
}

Bimodule regular_bimodule(const StructAlgebra& a) {
  Bimodule m;
  m.alg = &a;
  m.dim = a.dim;
  m.weights = a.weights;
  for (int i = 0; i < a.dim; ++i) {
    QMat l(a.dim, a.dim), r(a.dim, a.dim);
    for (int j = 0; j < a.dim; ++j) {
      for (const auto& [k, c] : a.prod[i][j].entries()) l.add(k, j, c);
      for (const auto& [k, c] : a.prod[j][i].entries()) r.add(k, j, c);
    }
    m.left.push_back(l);
    m.right.push_back(r);
  }
  return m;
}

OmegaResult omega(const StructAlgebra& a) {
  if (!a.unital) throw validation_error("omega: algebra must be unital");
  int d = a.dim;
  QMat mult(d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : a.prod[i][j].entries()) mult.add(k, i * d + j, c);
  RrefResult r = rref(mult);
  int od = static_cast<int>(r.kernel_basis.size());
  OmegaResult out;
  out.embedding = QMat(d * d, od);
  for (int v = 0; v < od; ++v)
    for (const auto& [k, c] : r.kernel_basis[v].entries()) out.embedding.set(k, v, c);
  Bimodule& om = out.bimodule;
  om.alg = &a;
  om.dim = od;
  // actions of e_t: on x⊗y, left: (e_t x)⊗y; right: x⊗(y e_t); restrict
  // to the kernel and express back in the kernel basis
  for (int t = 0; t < d; ++t) {
    QMat l(od, od), rr(od, od);
    for (int v = 0; v < od; ++v) {
      QVec lv, rv;
      for (const auto& [ij, c] : r.kernel_basis[v].entries()) {
        int i = ij / d, j = ij % d;
        for (const auto& [k, ck] : a.prod[t][i].entries())
          lv.axpy(c * ck, QVec::unit(k * d + j));
        for (const auto& [k, ck] : a.prod[j][t].entries())
          rv.axpy(c * ck, QVec::unit(i * d + k));
      }
      auto lc = solve(out.embedding, lv);
      auto rc = solve(out.embedding, rv);
      check_internal(lc.has_value() && rc.has_value(),
                     "omega: action does not preserve the kernel");
      for (const auto& [k, c] : lc->entries()) l.set(k, v, c);
      for (const auto& [k, c] : rc->entries()) rr.set(k, v, c);
    }
    om.left.push_back(l);
    om.right.push_back(rr);
  }
  return out;
}

}  // namespace homcolim
