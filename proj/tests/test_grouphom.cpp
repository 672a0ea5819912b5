#include "homcolim/grouphom.hpp"

#include "doctest.h"
#include "homcolim/snf.hpp"

using namespace homcolim;

namespace {

// ℤ-module of rank 1 where the chosen generator acts by −1 (order-2 action).
template <typename K>
GModuleT<K> sign_module(const FinGroup& g, int generator) {
  GModuleT<K> m;
  m.group = &g;
  m.rank = 1;
  m.action.resize(g.order);
  std::vector<int> sign(g.order, 1);
  // propagate the sign along powers of all elements via the homomorphism
  for (int a = 0; a < g.order; ++a) {
    int x = g.identity, s = 1, steps = 0;
    while (true) {
      if (x == a) break;
      x = g.mult[x][generator];
      s = -s;
      if (++steps > g.order) {
        s = 1;  // not a power of the generator; only used for cyclic groups
        break;
      }
    }
    sign[a] = s;
  }
  for (int a = 0; a < g.order; ++a) {
    Mat<K> mm(1, 1);
    mm.set(0, 0, K(sign[a]));
    m.action[a] = mm;
  }
  m.validate();
  return m;
}

// Rank-2 module where the generator acts by the companion matrix of the
// q-th cyclotomic-flavoured relation; valid for q = 3 (x²+x+1) and q = 4
// (rotation by 90°).
ZGModule planar_module(const FinGroup& g, int q) {
  ZMat r(2, 2);
  if (q == 3) {
    r.set(0, 1, Int(-1));
    r.set(1, 0, Int(1));
    r.set(1, 1, Int(-1));
  } else if (q == 4) {
    r.set(0, 1, Int(-1));
    r.set(1, 0, Int(1));
  } else {
    throw validation_error("planar_module: unsupported order");
  }
  ZGModule m;
  m.group = &g;
  m.rank = 2;
  m.action.resize(g.order);
  ZMat pw = ZMat::identity(2);
  int x = g.identity;
  for (int i = 0; i < g.order; ++i) {
    m.action[x] = pw;
    pw = r * pw;
    x = g.mult[x][1];
  }
  m.validate();
  return m;
}

bool same_homology(const std::vector<HomologyClassSpace>& a,
                   const std::vector<HomologyClassSpace>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].dim != b[i].dim || a[i].torsion != b[i].torsion) return false;
  return true;
}

}  // namespace

TEST_CASE("group validation") {
  FinGroup c2 = cyclic_group(2);
  c2.validate();
  FinGroup bad = c2;
  bad.mult[1][1] = 1;  // g² = g: no inverse for g
  CHECK_THROWS_AS(bad.validate(), validation_error);
  FinGroup s3 = symmetric_group_3();
  CHECK(s3.order == 6);
  CHECK(s3.element_order(1) == 2);
  CHECK(as_category(s3).n_morphisms() == 6);
}

TEST_CASE("H_n(C2; Z) through degree 5") {
  FinGroup c2 = cyclic_group(2);
  auto h = group_homology(c2, trivial_module<Int>(c2, 1), 5);
  std::vector<std::vector<Int>> torsion = {{}, {2}, {}, {2}, {}, {2}};
  for (int n = 0; n <= 5; ++n) {
    CHECK(h[n].dim == (n == 0 ? 1 : 0));
    CHECK(h[n].torsion == torsion[n]);
  }
}

TEST_CASE("cyclic group oracle basics") {
  FinGroup c2 = cyclic_group(2);
  auto h2 = cyclic_group_oracle(c2, trivial_module<Int>(c2, 1), 3);
  CHECK(h2[0].dim == 1);
  CHECK(h2[1].torsion == std::vector<Int>{2});
  CHECK(h2[2].torsion.empty());
  CHECK(h2[3].torsion == std::vector<Int>{2});

  FinGroup c3 = cyclic_group(3);
  auto h3 = cyclic_group_oracle(c3, trivial_module<Int>(c3, 1), 3);
  CHECK(h3[1].torsion == std::vector<Int>{3});
  CHECK(h3[3].torsion == std::vector<Int>{3});

  for (int q = 2; q <= 5; ++q) {
    FinGroup cq = cyclic_group(q);
    auto hq = cyclic_group_oracle(cq, trivial_module<Rat>(cq, 2), 3);
    CHECK(hq[0].dim == 2);
    for (int n = 1; n <= 3; ++n) CHECK(hq[n].dim == 0);
  }

  FinGroup s3 = symmetric_group_3();
  CHECK_THROWS_AS(cyclic_group_oracle(s3, trivial_module<Int>(s3, 1), 2), validation_error);
}

TEST_CASE("nerve path matches the periodic oracle for cyclic groups") {
  for (int q = 2; q <= 5; ++q) {
    FinGroup cq = cyclic_group(q);
    ZGModule triv = trivial_module<Int>(cq, 1);
    CHECK(same_homology(group_homology(cq, triv, 4), cyclic_group_oracle(cq, triv, 4)));
  }
  {
    FinGroup c6 = cyclic_group(6);
    ZGModule triv = trivial_module<Int>(c6, 1);
    CHECK(same_homology(group_homology(c6, triv, 3), cyclic_group_oracle(c6, triv, 3)));
    QGModule qt = trivial_module<Rat>(c6, 1);
    CHECK(same_homology(group_homology(c6, qt, 4), cyclic_group_oracle(c6, qt, 4)));
  }
  // nontrivial modules
  FinGroup c2 = cyclic_group(2);
  ZGModule sgn = sign_module<Int>(c2, 1);
  CHECK(same_homology(group_homology(c2, sgn, 4), cyclic_group_oracle(c2, sgn, 4)));
  FinGroup c3 = cyclic_group(3);
  ZGModule rot3 = planar_module(c3, 3);
  CHECK(same_homology(group_homology(c3, rot3, 3), cyclic_group_oracle(c3, rot3, 3)));
  FinGroup c4 = cyclic_group(4);
  ZGModule rot4 = planar_module(c4, 4);
  CHECK(same_homology(group_homology(c4, rot4, 2), cyclic_group_oracle(c4, rot4, 2)));
}

TEST_CASE("H_0 is the coinvariants") {
  FinGroup c3 = cyclic_group(3);
  ZGModule rot = planar_module(c3, 3);
  // coinvariants of the rotation module: quotient by im(t−1); t−1 has
  // determinant 3, so M_G = ℤ²/(t−1)ℤ² of order 3.
  auto h = group_homology(c3, rot, 0);
  CHECK(h[0].dim == 0);
  CHECK(h[0].torsion == std::vector<Int>{3});

  FinGroup c2 = cyclic_group(2);
  auto hs = group_homology(c2, sign_module<Int>(c2, 1), 0);
  CHECK(hs[0].dim == 0);
  CHECK(hs[0].torsion == std::vector<Int>{2});
}

TEST_CASE("rational group homology vanishes in positive degrees") {
  std::vector<FinGroup> groups = {cyclic_group(2), cyclic_group(3), symmetric_group_3()};
  for (const FinGroup& g : groups) {
    auto h = group_homology(g, trivial_module<Rat>(g, 1), 2);
    CHECK(h[0].dim == 1);
    CHECK(h[1].dim == 0);
    CHECK(h[2].dim == 0);
  }
}

TEST_CASE("H_1(S3; Z) equals the abelianization") {
  FinGroup s3 = symmetric_group_3();
  auto h = group_homology(s3, trivial_module<Int>(s3, 1), 1);
  CHECK(h[1].dim == 0);
  CHECK(h[1].torsion == std::vector<Int>{2});

  // independent oracle: abelianize <a,b | a³, b², abab> via SNF of the
  // exponent-sum relation matrix
  ZMat rel(3, 2);
  rel.set(0, 0, Int(3));
  rel.set(1, 1, Int(2));
  rel.set(2, 0, Int(2));
  rel.set(2, 1, Int(2));
  SnfResult s = snf(rel);
  REQUIRE(s.invariant_factors.size() == 2);
  CHECK(s.invariant_factors[0] == 1);
  CHECK(s.invariant_factors[1] == 2);
}

TEST_CASE("functoriality of H_1 along C4 -> C2") {
  FinGroup c4 = cyclic_group(4);
  FinGroup c2 = cyclic_group(2);
  FinCategory cat4 = as_category(c4), cat2 = as_category(c2);
  ZFunctor f4 = constant_functor<Int>(cat4, 1);
  ZFunctor f2 = constant_functor<Int>(cat2, 1);
  ChainComplexZ cx4 = colim_complex(cat4, f4, 2);
  ChainComplexZ cx2 = colim_complex(cat2, f2, 2);
  // φ: t ↦ s. On normalized degree-n chains, apply φ entrywise and kill
  // chains containing an identity. Degree-1 bases are (t,t²,t³) and (s).
  ZMat phi1(1, 3);
  phi1.set(0, 0, Int(1));   // t ↦ s
  phi1.set(0, 2, Int(1));   // t³ ↦ s; t² ↦ e dies
  // Chain-map law at degree 1 is automatic (both d₁ = 0); the degree-1
  // statement of interest: H₁(C4) = ℤ/4 generated by (t); its image (s)
  // generates H₁(C2) = ℤ/2, so the induced map is surjective.
  CHECK(cx4.differential(1) == ZMat(1, 3));
  CHECK(cx2.differential(1) == ZMat(1, 1));
  ZVec gen = ZVec::unit(0);              // the cycle (t)
  ZVec image = phi1.apply(gen);          // = (s)
  CHECK(image.at(0) == 1);
  // boundaries of cx2 in degree 1 are 2ℤ·(s): the class of (s) is the
  // nonzero element of ℤ/2, hence a generator.
  ZMat d2 = cx2.differential(2);
  SnfResult s = snf(d2);
  REQUIRE(s.invariant_factors.size() == 1);
  CHECK(s.invariant_factors[0] == 2);
}
