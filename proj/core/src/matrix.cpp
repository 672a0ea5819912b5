#include "homcolim/matrix.hpp"

namespace homcolim {

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw validation_error("empty rational literal");
  try {
    Rat r(s);
    if (r.get_den() == 0) throw validation_error("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw validation_error("bad rational literal: '" + s + "'");
  }
}

std::string format_rational(const Rat& r) {
  return r.get_str();
}

QMat to_rational(const ZMat& m) {
  QMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    QVec row;
    for (const auto& [j, v] : m.row(i).entries()) row.push_back_unchecked(j, Rat(v));
    out.set_row(i, std::move(row));
  }
  return out;
}

}  // namespace homcolim
