#include "homcolim/steinberg.hpp"

#include <map>
#include <sstream>

namespace homcolim {

namespace {

void check_table(const std::vector<std::vector<int>>& t, int size, const char* what) {
  if (static_cast<int>(t.size()) != size)
    throw validation_error(std::string("ring: bad ") + what + " table shape");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != size)
      throw validation_error(std::string("ring: bad ") + what + " table shape");
    for (int v : row)
      if (v < 0 || v >= size)
        throw validation_error(std::string("ring: ") + what + " entry out of range");
  }
}

}  // namespace

void FiniteRing::validate() const {
  if (size <= 0) throw validation_error("ring: empty carrier");
  check_table(add, size, "addition");
  check_table(mul, size, "multiplication");
  if (zero < 0 || zero >= size || one < 0 || one >= size)
    throw validation_error("ring: zero/one out of range");
  for (int x = 0; x < size; ++x) {
    if (add[zero][x] != x || add[x][zero] != x)
      throw validation_error("ring: zero is not an additive identity");
    if (mul[one][x] != x || mul[x][one] != x)
      throw validation_error("ring: one is not a multiplicative identity");
    bool has_neg = false;
    for (int y = 0; y < size; ++y) has_neg |= (add[x][y] == zero);
    if (!has_neg) throw validation_error("ring: missing additive inverse");
    for (int y = 0; y < size; ++y)
      if (add[x][y] != add[y][x]) throw validation_error("ring: addition not commutative");
  }
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      for (int z = 0; z < size; ++z) {
        if (add[add[x][y]][z] != add[x][add[y][z]])
          throw validation_error("ring: addition not associative");
        if (mul[mul[x][y]][z] != mul[x][mul[y][z]])
          throw validation_error("ring: multiplication not associative");
        if (mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]])
          throw validation_error("ring: left distributivity fails");
        if (mul[add[x][y]][z] != add[mul[x][z]][mul[y][z]])
          throw validation_error("ring: right distributivity fails");
      }
}

int FiniteRing::neg(int x) const {
  for (int y = 0; y < size; ++y)
    if (add[x][y] == zero) return y;
  throw validation_error("ring: missing additive inverse");
}

FiniteRing zmod(int m) {
  if (m <= 0) throw validation_error("zmod: modulus must be positive");
  FiniteRing r;
  r.size = m;
  r.add.assign(m, std::vector<int>(m));
  r.mul.assign(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      r.add[x][y] = (x + y) % m;
      r.mul[x][y] = (x * y) % m;
    }
  r.zero = 0;
  r.one = m == 1 ? 0 : 1;
  return r;
}

void RingHom::validate() const {
  if (src == nullptr || dst == nullptr) throw validation_error("hom: unbound");
  if (static_cast<int>(image.size()) != src->size)
    throw validation_error("hom: image table size mismatch");
  for (int v : image)
    if (v < 0 || v >= dst->size) throw validation_error("hom: image out of range");
  if (image[src->one] != dst->one) throw validation_error("hom: unit not preserved");
  for (int x = 0; x < src->size; ++x)
    for (int y = 0; y < src->size; ++y) {
      if (image[src->add[x][y]] != dst->add[image[x]][image[y]])
        throw validation_error("hom: not additive");
      if (image[src->mul[x][y]] != dst->mul[image[x]][image[y]])
        throw validation_error("hom: not multiplicative");
    }
}

bool RingHom::surjective() const {
  std::vector<char> hit(dst->size, 0);
  for (int v : image) hit[v] = 1;
  for (char h : hit)
    if (!h) return false;
  return true;
}

std::vector<int> RingHom::kernel() const {
  std::vector<int> out;
  for (int x = 0; x < src->size; ++x)
    if (image[x] == dst->zero) out.push_back(x);
  return out;
}

RingHom zmod_projection(const FiniteRing& b, const FiniteRing& a) {
  if (a.size == 0 || b.size % a.size != 0)
    throw validation_error("zmod_projection: target modulus must divide source");
  RingHom f;
  f.src = &b;
  f.dst = &a;
  for (int x = 0; x < b.size; ++x) f.image.push_back(x % a.size);
  f.validate();
  return f;
}

void ElementaryContext::validate() const {
  if (ring == nullptr) throw validation_error("elementary context: unbound ring");
  ring->validate();
  if (n < 3) throw validation_error("elementary context: need N >= 3");
}

RingMatrix ElementaryContext::identity() const {
  RingMatrix m;
  m.n = n;
  m.entry.assign(n * n, ring->zero);
  for (int i = 0; i < n; ++i) m.entry[i * n + i] = ring->one;
  return m;
}

RingMatrix ElementaryContext::mul(const RingMatrix& x, const RingMatrix& y) const {
  RingMatrix out;
  out.n = n;
  out.entry.assign(n * n, ring->zero);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int xik = x.at(i, k);
      if (xik == ring->zero) continue;
      for (int j = 0; j < n; ++j) {
        int& e = out.entry[i * n + j];
        e = ring->add[e][ring->mul[xik][y.at(k, j)]];
      }
    }
  return out;
}

RingMatrix ElementaryContext::e_matrix(int i, int j, int x) const {
  if (i == j) throw validation_error("e_matrix: diagonal index pair");
  if (i < 1 || j < 1 || i > n || j > n) throw validation_error("e_matrix: index out of range");
  RingMatrix m = identity();
  m.entry[(i - 1) * n + (j - 1)] = x;
  return m;
}

RingMatrix ElementaryContext::e_inverse(int i, int j, int x) const {
  return e_matrix(i, j, ring->neg(x));
}

SteinbergVerdict steinberg_relations_check(const ElementaryContext& ctx) {
  ctx.validate();
  const FiniteRing& r = *ctx.ring;
  int n = ctx.n;
  long tuples = static_cast<long>(n) * (n - 1);       // family 1: (i,j)
  tuples += static_cast<long>(n) * (n - 1) * (n - 2); // family 2: (i,j,k)
  tuples += static_cast<long>(n) * (n - 1) * n * (n - 1);  // family 3 bound
  if (static_cast<long>(r.size) * r.size * tuples > 10'000'000L)
    throw validation_error("steinberg_relations_check: exhaustive budget exceeded");

  SteinbergVerdict v;
  auto fail = [&](const std::string& what, int i, int j, int k, int l, int x, int y) {
    std::ostringstream os;
    os << what << " at indices (" << i << "," << j;
    if (k) os << "," << k;
    if (l) os << "," << l;
    os << ") with x=" << x << " y=" << y;
    v.ok = false;
    v.witness = os.str();
  };

  for (int x = 0; x < r.size && v.ok; ++x)
    for (int y = 0; y < r.size && v.ok; ++y) {
      // e_{i,j}(x) e_{i,j}(y) = e_{i,j}(x+y)
      for (int i = 1; i <= n && v.ok; ++i)
        for (int j = 1; j <= n && v.ok; ++j) {
          if (i == j) continue;
          ++v.checked;
          RingMatrix lhs = ctx.mul(ctx.e_matrix(i, j, x), ctx.e_matrix(i, j, y));
          if (!(lhs.entry == ctx.e_matrix(i, j, r.add[x][y]).entry))
            fail("additivity relation fails", i, j, 0, 0, x, y);
        }
      // [e_{i,j}(x), e_{j,k}(y)] = e_{i,k}(xy), i,j,k distinct
      for (int i = 1; i <= n && v.ok; ++i)
        for (int j = 1; j <= n && v.ok; ++j)
          for (int k = 1; k <= n && v.ok; ++k) {
            if (i == j || j == k || i == k) continue;
            ++v.checked;
            RingMatrix a = ctx.e_matrix(i, j, x), b = ctx.e_matrix(j, k, y);
            RingMatrix comm = ctx.mul(ctx.mul(a, b), ctx.mul(ctx.e_inverse(i, j, x),
                                                             ctx.e_inverse(j, k, y)));
            if (!(comm.entry == ctx.e_matrix(i, k, r.mul[x][y]).entry))
              fail("commutator relation fails", i, j, k, 0, x, y);
          }
      // [e_{i,j}(x), e_{i',j'}(y)] = 1 when j != i' and i != j'
      for (int i = 1; i <= n && v.ok; ++i)
        for (int j = 1; j <= n && v.ok; ++j) {
          if (i == j) continue;
          for (int ip = 1; ip <= n && v.ok; ++ip)
            for (int jp = 1; jp <= n && v.ok; ++jp) {
              if (ip == jp || j == ip || i == jp) continue;
              ++v.checked;
              RingMatrix a = ctx.e_matrix(i, j, x), b = ctx.e_matrix(ip, jp, y);
              RingMatrix comm = ctx.mul(ctx.mul(a, b), ctx.mul(ctx.e_inverse(i, j, x),
                                                               ctx.e_inverse(ip, jp, y)));
              if (!(comm.entry == ctx.identity().entry))
                fail("disjoint commutator relation fails", i, j, ip, jp, x, y);
            }
        }
    }
  return v;
}

FiberProduct fiber_product(const FiniteRing& b, const FiniteRing& a, const RingHom& f) {
  b.validate();
  a.validate();
  if (f.src != &b || f.dst != &a)
    throw validation_error("fiber_product: homomorphism not bound to the given rings");
  f.validate();
  if (!f.surjective()) throw validation_error("fiber_product: homomorphism not surjective");

  FiberProduct d;
  std::map<std::pair<int, int>, int> index;
  for (int x = 0; x < b.size; ++x)
    for (int y = 0; y < b.size; ++y)
      if (f.image[x] == f.image[y]) {
        index[{x, y}] = static_cast<int>(d.pairs.size());
        d.pairs.emplace_back(x, y);
      }
  int sz = static_cast<int>(d.pairs.size());
  d.ring.size = sz;
  d.ring.add.assign(sz, std::vector<int>(sz));
  d.ring.mul.assign(sz, std::vector<int>(sz));
  for (int p = 0; p < sz; ++p)
    for (int q = 0; q < sz; ++q) {
      auto [x1, y1] = d.pairs[p];
      auto [x2, y2] = d.pairs[q];
      d.ring.add[p][q] = index.at({b.add[x1][x2], b.add[y1][y2]});
      d.ring.mul[p][q] = index.at({b.mul[x1][x2], b.mul[y1][y2]});
    }
  d.ring.zero = index.at({b.zero, b.zero});
  d.ring.one = index.at({b.one, b.one});
  d.ring.validate();
  return d;
}

RingHom FiberProduct::proj(int coordinate, const FiniteRing& b) const {
  if (coordinate != 1 && coordinate != 2)
    throw validation_error("fiber product: coordinate must be 1 or 2");
  RingHom p;
  p.src = &ring;
  p.dst = &b;
  for (const auto& [x, y] : pairs) p.image.push_back(coordinate == 1 ? x : y);
  p.validate();
  return p;
}

SteinbergVerdict gamma_generators_trivial(const FiniteRing& b, const FiniteRing& a,
                                          const RingHom& f, int n) {
  FiberProduct d = fiber_product(b, a, f);
  ElementaryContext ctx{&d.ring, n};
  ctx.validate();
  ElementaryContext bctx{&b, n};
  RingHom p1 = d.proj(1, b), p2 = d.proj(2, b);

  std::map<std::pair<int, int>, int> index;
  for (int p = 0; p < static_cast<int>(d.pairs.size()); ++p) index[d.pairs[p]] = p;

  auto push_through = [&](const RingMatrix& m, const RingHom& p) {
    RingMatrix out;
    out.n = m.n;
    for (int e : m.entry) out.entry.push_back(p.image[e]);
    return out;
  };

  SteinbergVerdict v;
  std::vector<int> ker = f.kernel();
  for (int x : ker)
    for (int y : ker) {
      ++v.checked;
      int xl = index.at({x, b.zero});  // (x, 0) in D
      int yr = index.at({b.zero, y});  // (0, y) in D
      // (x,0)·(0,y) = (0,0) in D, so the matrices must commute exactly
      if (d.ring.mul[xl][yr] != d.ring.zero || d.ring.mul[yr][xl] != d.ring.zero) {
        v.ok = false;
        v.witness = "product of opposite-coordinate kernel elements nonzero";
        return v;
      }
      RingMatrix e1 = ctx.e_matrix(1, 2, xl), e2 = ctx.e_matrix(2, 1, yr);
      RingMatrix comm = ctx.mul(ctx.mul(e1, e2),
                                ctx.mul(ctx.e_inverse(1, 2, xl), ctx.e_inverse(2, 1, yr)));
      if (!(comm.entry == ctx.identity().entry)) {
        std::ostringstream os;
        os << "gamma generator nontrivial for kernel pair x=" << x << " y=" << y;
        v.ok = false;
        v.witness = os.str();
        return v;
      }
      // both projections send the generator to the identity of E_N(B)
      for (const RingHom* p : {&p1, &p2})
        if (!(push_through(comm, *p).entry == bctx.identity().entry)) {
          v.ok = false;
          v.witness = "projection of gamma generator nontrivial";
          return v;
        }
    }
  return v;
}

}  // namespace homcolim
