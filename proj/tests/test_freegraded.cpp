#include "homcolim/freegraded.hpp"

#include "doctest.h"

using namespace homcolim;

namespace {

struct IdentityPresentation {
  GradedFreeAlgebra f;
  FreeTensorView view;
  GradedPresentation p;
  IdentityPresentation(int m, int w)
      : f(std::vector<int>(m, 1), w), view(&f), p(&f, &view, [&] {
          std::vector<QVec> images;
          for (int g = 0; g < m; ++g) images.push_back(QVec::unit(g));
          return images;
        }()) {}
};

struct TruncPolyPresentation {
  GradedFreeAlgebra f;
  TruncPolyAlgebra a;
  GradedPresentation p;
  TruncPolyPresentation(int k, int w)
      : f({1}, w), a(k), p(&f, &a, {QVec::unit(0)}) {}
};

struct ZeroMultPresentation {
  GradedFreeAlgebra f;
  ZeroMultAlgebra a;
  GradedPresentation p;
  ZeroMultPresentation(int m, int w)
      : f(std::vector<int>(m, 1), w), a({m}), p(&f, &a, [&] {
          std::vector<QVec> images;
          for (int g = 0; g < m; ++g) images.push_back(QVec::unit(g));
          return images;
        }()) {}
};

}  // namespace

TEST_CASE("word bases and truncation") {
  GradedFreeAlgebra f({1, 1}, 4);
  CHECK(f.dim(1) == 2);
  CHECK(f.dim(2) == 4);
  CHECK(f.dim(3) == 8);
  CHECK(f.index_of(2, {0, 1}) == 1);  // lex: xx, xy, yx, yy
  CHECK_THROWS_AS(f.basis(5), validation_error);

  GradedFreeAlgebra g({1, 2}, 4);  // x weight 1, y weight 2
  CHECK(g.dim(1) == 1);
  CHECK(g.dim(2) == 2);   // xx, y
  CHECK(g.dim(3) == 3);   // xxx, xy, yx
  // length-first order: y before xx
  CHECK(g.basis(2)[0] == std::vector<int>{1});
}

TEST_CASE("component products") {
  GradedFreeAlgebra f({1, 1}, 4);
  WeightSubspace x{1, Subspace(2, {QVec::unit(0)})};
  WeightSubspace y{1, Subspace(2, {QVec::unit(1)})};
  WeightSubspace xy = component_product(f, x, y);
  CHECK(xy.space.dim() == 1);
  CHECK(xy.space.contains(QVec::unit(f.index_of(2, {0, 1}))));

  CHECK(component_product(f, full_component(f, 1), full_component(f, 1)).space.dim() == 4);

  QVec sum = QVec::unit(0);
  sum.axpy(Rat(1), QVec::unit(1));
  QVec diff = QVec::unit(0);
  diff.axpy(Rat(-1), QVec::unit(1));
  WeightSubspace a{1, Subspace(2, {sum})};
  WeightSubspace b{1, Subspace(2, {diff})};
  WeightSubspace prod = component_product(f, a, b);
  CHECK(prod.space.dim() == 1);
  QVec expect;  // xx − xy + yx − yy
  expect.axpy(Rat(1), QVec::unit(0));
  expect.axpy(Rat(-1), QVec::unit(1));
  expect.axpy(Rat(1), QVec::unit(2));
  expect.axpy(Rat(-1), QVec::unit(3));
  CHECK(prod.space.contains(expect));

  CHECK_THROWS_AS(component_product(f, full_component(f, 2), full_component(f, 3)),
                  validation_error);
}

TEST_CASE("kernels of presentations") {
  IdentityPresentation id(2, 4);
  id.p.validate(4);
  for (int w = 1; w <= 4; ++w) CHECK(id.p.kernel_component(w).space.dim() == 0);

  ZeroMultPresentation zm(2, 4);
  zm.p.validate(4);
  CHECK(zm.p.kernel_component(1).space.dim() == 0);
  CHECK(zm.p.kernel_component(2).space.dim() == 4);

  TruncPolyPresentation tp(3, 5);
  tp.p.validate(5);
  CHECK(tp.p.kernel_component(1).space.dim() == 0);
  CHECK(tp.p.kernel_component(2).space.dim() == 0);
  CHECK(tp.p.kernel_component(3).space.dim() == 1);
}

TEST_CASE("ideal powers") {
  ZeroMultPresentation zm(2, 4);
  CHECK(zm.p.ideal_power_component(1, 2).space == zm.p.kernel_component(2).space);
  CHECK(zm.p.ideal_power_component(2, 4).space.dim() == 16);

  IdentityPresentation id(2, 4);
  for (int n = 1; n <= 3; ++n)
    for (int w = 1; w <= 4; ++w) CHECK(id.p.ideal_power_component(n, w).space.dim() == 0);

  // (R^a)(R^b) ⊆ R^{a+b}
  TruncPolyPresentation tp(3, 8);
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int wa = 1; wa <= 4; ++wa)
        for (int wb = 1; wb <= 4; ++wb) {
          WeightSubspace pa = tp.p.ideal_power_component(a, wa);
          WeightSubspace pb = tp.p.ideal_power_component(b, wb);
          if (pa.space.dim() == 0 || pb.space.dim() == 0) continue;
          WeightSubspace prod = component_product(tp.f, pa, pb);
          CHECK(tp.p.ideal_power_component(a + b, wa + wb).space.contains(prod.space));
        }
}

TEST_CASE("commutator components and necklaces") {
  GradedFreeAlgebra one({1}, 5);
  for (int w = 2; w <= 5; ++w) CHECK(ff_component(one, w).space.dim() == 0);

  GradedFreeAlgebra two({1, 1}, 4);
  CHECK(ff_component(two, 2).space.dim() == 1);
  CHECK(ff_component(two, 3).space.dim() == 4);

  CHECK(necklace_count(2, 2) == 3);
  CHECK(necklace_count(2, 3) == 4);
  CHECK(necklace_count(3, 2) == 6);
  for (int w = 1; w <= 6; ++w) CHECK(necklace_count(1, w) == 1);
}

TEST_CASE("lemma 5.6 dimension identity") {
  for (int m = 1; m <= 3; ++m) CHECK(lemma56_dimension_check(m, 6));
}

TEST_CASE("Hopf formula for odd cyclic homology, small presentations") {
  // monogenic truncated polynomial algebras: [F,F] = 0 kills the numerator
  for (int k : {3, 4}) {
    TruncPolyPresentation tp(k, 5);
    for (int n = 0; n <= 1; ++n) {
      auto dims = hopf_hc_odd(tp.p, n, 5);
      for (int d : dims) CHECK(d == 0);
    }
  }

  // 2-dim zero multiplication, n = 0: HC_1 dims per weight 1,0 at w=2,3
  ZeroMultPresentation zm(2, 4);
  auto dims = hopf_hc_odd(zm.p, 0, 3);
  CHECK(dims[0] == 0);
  CHECK(dims[1] == 1);
  CHECK(dims[2] == 0);

  IdentityPresentation id(2, 4);
  for (int n = 0; n <= 1; ++n) {
    auto d = hopf_hc_odd(id.p, n, 4);
    for (int x : d) CHECK(x == 0);
  }
}

TEST_CASE("unital variant reduces to the non-unital one in positive weight") {
  // k·1 sits in weight 0, so in every weight w >= 1 the component of
  // [F,F] + k·1 is just [F,F]_w; assert the numerator equality directly.
  ZeroMultPresentation zm(2, 4);
  for (int w = 2; w <= 4; ++w) {
    WeightSubspace rpow = zm.p.ideal_power_component(1, w);
    Subspace ff = ff_component(zm.f, w).space;
    // adding the weight-w component of the unit line (zero) changes nothing
    Subspace ff_plus_unit = subspace_sum(ff, Subspace(zm.f.dim(w)));
    CHECK(subspace_intersect(rpow.space, ff) ==
          subspace_intersect(rpow.space, ff_plus_unit));
  }
}
