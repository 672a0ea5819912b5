#include "homcolim/chain_map.hpp"

namespace homcolim {
namespace {

// Expresses cycles in homology coordinates: boundaries first, then the
// chosen representatives; the coefficient of representative j is read off
// the tracked combination.
class HomologyCoords {
 public:
  HomologyCoords(const ChainComplexQ& c, int n, const HomologyClassSpace& h)
      : e_(std::max(c.dim(n), 1), /*track=*/true) {
    QMat bt = c.differential(n + 1).transpose();
    for (int i = 0; i < bt.rows(); ++i) e_.insert(bt.row(i));
    boundary_count_ = bt.rows();
    for (const auto& r : h.representatives) e_.insert(r);
    dim_ = static_cast<int>(h.representatives.size());
  }

  QVec coords(const QVec& cycle) const {
    auto combo = e_.express(cycle);
    check_internal(combo.has_value(),
                   "homology coordinates: vector not in cycles + boundaries span");
    QVec out;
    for (const auto& [i, c] : combo->entries())
      if (i >= boundary_count_) out.push_back_unchecked(i - boundary_count_, c);
    return out;
  }

  int dim() const { return dim_; }

 private:
  Echelon e_;
  int boundary_count_;
  int dim_;
};

const HomologyClassSpace& at_degree(const std::vector<HomologyClassSpace>& hs, int n) {
  for (const auto& h : hs)
    if (h.degree == n) return h;
  static const HomologyClassSpace zero{};
  return zero;
}

}  // namespace

ChainMap::ChainMap(const ChainComplexQ* source, const ChainComplexQ* target,
                   std::vector<QMat> components)
    : source_(source), target_(target), components_(std::move(components)) {
  int top = std::max(source_->top_degree(), target_->top_degree());
  for (int n = 0; n <= top; ++n) {
    QMat fn = component(n);
    if (fn.rows() != target_->dim(n) || fn.cols() != source_->dim(n))
      throw validation_error("chain map: component shape mismatch at degree " +
                             std::to_string(n));
    if (n >= 1) {
      QMat lhs = component(n - 1) * source_->differential(n);
      QMat rhs = target_->differential(n) * component(n);
      if (!(lhs == rhs))
        throw validation_error("chain map: does not commute with d at degree " +
                               std::to_string(n));
    }
  }
}

QMat ChainMap::component(int n) const {
  if (n >= 0 && n < static_cast<int>(components_.size())) {
    const QMat& m = components_[n];
    if (m.rows() != 0 || m.cols() != 0) return m;
  }
  return QMat(target_->dim(n), source_->dim(n));
}

QMat induced_on_homology(const ChainMap& f, int n,
                         const std::vector<HomologyClassSpace>& source_h,
                         const std::vector<HomologyClassSpace>& target_h) {
  const HomologyClassSpace& sh = at_degree(source_h, n);
  const HomologyClassSpace& th = at_degree(target_h, n);
  HomologyCoords coords(f.target(), n, th);
  QMat fn = f.component(n);
  QMat out(th.dim, sh.dim);
  for (int j = 0; j < static_cast<int>(sh.representatives.size()); ++j) {
    QVec image = fn.apply(sh.representatives[j]);
    QVec cc = coords.coords(image);
    for (const auto& [i, c] : cc.entries()) out.set(i, j, c);
  }
  return out;
}

QMat induced_on_homology(const ChainMap& f, int n) {
  auto sh = homology_q(f.source(), n, n);
  auto th = homology_q(f.target(), n, n);
  return induced_on_homology(f, n, sh, th);
}

LesResult les_check(const ChainMap& f, const ChainMap& g, int max_degree) {
  const ChainComplexQ& A = f.source();
  const ChainComplexQ& B = f.target();
  const ChainComplexQ& C = g.target();
  if (&g.source() != &B) throw validation_error("les_check: g must start at f's target");
  int top = std::max({A.top_degree(), B.top_degree(), C.top_degree()});

  // Degreewise short exactness.
  for (int n = 0; n <= top; ++n) {
    QMat fn = f.component(n), gn = g.component(n);
    if (!(gn * fn).is_zero())
      throw validation_error("les_check: g∘f != 0 at degree " + std::to_string(n));
    int rf = rank_of(fn), rg = rank_of(gn);
    if (rf != A.dim(n))
      throw validation_error("les_check: f not injective at degree " + std::to_string(n));
    if (rg != C.dim(n))
      throw validation_error("les_check: g not surjective at degree " + std::to_string(n));
    if (rf + rg != B.dim(n))
      throw validation_error("les_check: sequence not exact at degree " + std::to_string(n));
  }

  LesResult out;
  out.ha = homology_q(A, 0, max_degree);
  out.hb = homology_q(B, 0, max_degree);
  out.hc = homology_q(C, 0, max_degree);

  for (int n = 0; n <= max_degree; ++n) {
    out.induced_f.push_back(induced_on_homology(f, n, out.ha, out.hb));
    out.induced_g.push_back(induced_on_homology(g, n, out.hb, out.hc));
  }

  // Connecting maps by the snake procedure.
  out.connecting.assign(max_degree + 1, QMat());
  for (int n = 1; n <= max_degree; ++n) {
    const HomologyClassSpace& hc_n = at_degree(out.hc, n);
    const HomologyClassSpace& ha_prev = at_degree(out.ha, n - 1);
    HomologyCoords coords(A, n - 1, ha_prev);
    QMat delta(ha_prev.dim, hc_n.dim);
    for (int j = 0; j < static_cast<int>(hc_n.representatives.size()); ++j) {
      auto lift = solve(g.component(n), hc_n.representatives[j]);
      check_internal(lift.has_value(), "les_check: failed to lift a cycle through g");
      QVec db = B.differential(n).apply(*lift);
      auto a = solve(f.component(n - 1), db);
      check_internal(a.has_value(), "les_check: boundary of lift not in image of f");
      check_internal(A.differential(n - 1).apply(*a).empty(),
                     "les_check: connecting image is not a cycle");
      QVec cc = coords.coords(*a);
      for (const auto& [i, c] : cc.entries()) delta.set(i, j, c);
    }
    out.connecting[n] = std::move(delta);
  }

  // Exactness of ... -> H_n(A) -> H_n(B) -> H_n(C) -> H_{n-1}(A) -> ...
  auto check_node = [&](const QMat& incoming, const QMat& outgoing, int degree,
                        const char* where) {
    int mid = outgoing.cols();
    check_internal(incoming.rows() == mid, "les_check: node dimension mismatch");
    bool composite_zero = (outgoing * incoming).is_zero();
    int defect = (mid - rank_of(outgoing)) - rank_of(incoming);
    bool ok = composite_zero && defect == 0;
    out.nodes.push_back({degree, where, ok, defect});
    if (!ok) out.exact = false;
  };

  for (int n = 0; n <= max_degree; ++n) {
    check_node(out.induced_f[n], out.induced_g[n], n, "B");
    // At H_n(C): outgoing is the connecting map (zero map for n = 0).
    QMat outgoing = n >= 1 ? out.connecting[n] : QMat(0, at_degree(out.hc, 0).dim);
    check_node(out.induced_g[n], outgoing, n, "C");
    if (n >= 1) check_node(out.connecting[n], out.induced_f[n - 1], n - 1, "A");
  }
  return out;
}

}  // namespace homcolim
