#include "doctest.h"

#include "homcolim/fincat.hpp"
#include "homcolim/freegraded.hpp"
#include "homcolim/grouphom.hpp"
#include "homcolim/hochschild.hpp"
#include "homcolim/io.hpp"
#include "homcolim/steinberg.hpp"

using namespace homcolim;

TEST_CASE("category documents: identities, composition, rejection") {
  auto d = io::parse_category(R"({
    "objects": ["a", "b", "c"],
    "morphisms": [{"name": "f", "dom": "a", "cod": "b"},
                  {"name": "g", "dom": "b", "cod": "c"},
                  {"name": "gf", "dom": "a", "cod": "c"}],
    "compose": [["g", "f", "gf"]]})");
  CHECK(d.cat.n_objects == 3);
  CHECK(d.cat.n_morphisms() == 6);  // three identities auto-added
  CHECK(d.mor_index.count("id:a") == 1);
  int f = d.mor_index.at("f"), g = d.mor_index.at("g");
  CHECK(d.cat.compose(g, f) == d.mor_index.at("gf"));

  // composable pair with no listed composite
  CHECK_THROWS_AS(io::parse_category(R"({
    "objects": ["a", "b", "c"],
    "morphisms": [{"name": "f", "dom": "a", "cod": "b"},
                  {"name": "g", "dom": "b", "cod": "c"}],
    "compose": []})"),
                  validation_error);
  // unknown object in a morphism
  CHECK_THROWS_AS(io::parse_category(R"({
    "objects": ["a"],
    "morphisms": [{"name": "f", "dom": "a", "cod": "z"}],
    "compose": []})"),
                  validation_error);
}

TEST_CASE("functor documents: both coefficient modes, shape checking") {
  auto c = io::parse_category(R"({
    "objects": ["a", "b"],
    "morphisms": [{"name": "f", "dom": "a", "cod": "b"}],
    "compose": []})");

  auto fq = io::parse_functor(
      R"({"coeff": "Q", "dims": {"a": 2, "b": 1}, "maps": {"f": [["1/2", "1"]]}})", c);
  CHECK(fq.coeff == "Q");
  auto h = derived_colim(c.cat, fq.q, 2);
  CHECK(h[0].dim == 1);
  CHECK(h[1].dim == 0);

  auto fz = io::parse_functor(
      R"({"coeff": "Z", "dims": {"a": 1, "b": 1}, "maps": {"f": [[2]]}})", c);
  auto hz = derived_colim(c.cat, fz.z, 2);
  CHECK(hz[0].dim == 1);  // poset with terminal object: colim_0 = M(b) = Z

  // matrix must be dim(cod) x dim(dom)
  CHECK_THROWS_AS(io::parse_functor(
                      R"({"coeff": "Q", "dims": {"a": 2, "b": 1}, "maps": {"f": [["1"]]}})", c),
                  validation_error);
  // rationals are not integers
  CHECK_THROWS_AS(io::parse_functor(
                      R"({"coeff": "Z", "dims": {"a": 1, "b": 1}, "maps": {"f": [["1/2"]]}})", c),
                  validation_error);
}

TEST_CASE("group documents: table and permutation forms") {
  FinGroup c2 = io::parse_group(R"({"table": [[0, 1], [1, 0]]})");
  CHECK(c2.order == 2);
  auto h = group_homology(c2, trivial_module<Int>(c2, 1), 2);
  CHECK(h[1].torsion.size() == 1);
  CHECK(h[1].torsion[0] == 2);

  // S3 from two generators
  FinGroup s3 = io::parse_group(R"({"perm_generators": [[1, 0, 2], [1, 2, 0]]})");
  CHECK(s3.order == 6);

  // not a group: 1 has no inverse
  CHECK_THROWS_AS(io::parse_group(R"({"table": [[0, 1], [1, 1]]})"), validation_error);
}

TEST_CASE("algebra documents: structure constants and validation") {
  StructAlgebra dual = io::parse_algebra(R"({
    "dim": 2, "unital": true, "unit": ["1", "0"],
    "table": [[["1","0"], ["0","1"]], [["0","1"], ["0","0"]]]})");
  auto hh = hochschild(dual, regular_bimodule(dual), 2);
  CHECK(hh[0].dim == 2);
  CHECK(hh[1].dim == 1);

  // non-associative table rejected
  CHECK_THROWS_AS(io::parse_algebra(R"({
    "dim": 2, "unital": true, "unit": ["1", "0"],
    "table": [[["1","0"], ["0","1"]], [["0","0"], ["0","1"]]]})"),
                  validation_error);
  // weights must match dim
  CHECK_THROWS_AS(io::parse_algebra(R"({
    "dim": 2, "unital": false,
    "table": [[["0","0"], ["0","0"]], [["0","0"], ["0","0"]]],
    "weights": [1]})"),
                  validation_error);
}

TEST_CASE("presentation documents") {
  const char* text = R"({
    "generators": [{"name": "x", "weight": 1}, {"name": "y", "weight": 1}],
    "algebra": {"dim": 2, "unital": false,
      "table": [[["0","0"], ["0","0"]], [["0","0"], ["0","0"]]],
      "weights": [1, 1]},
    "images": {"x": ["1", "0"], "y": ["0", "1"]}})";
  auto doc = io::parse_presentation(text, 4);
  GradedPresentation p = doc->presentation();
  // zero-mult on two generators: relations are all weight-2 words
  CHECK(p.kernel_component(2).space.dim() == 4);
  CHECK(magnus_check(p, 3));

  // image vector with the wrong length for the generator's weight component
  CHECK_THROWS_AS(io::parse_presentation(R"({
    "generators": [{"name": "x", "weight": 1}],
    "algebra": {"dim": 1, "unital": false,
      "table": [[["0"]]], "weights": [1]},
    "images": {"x": ["1", "0"]}})",
                                         3),
                  validation_error);
}

TEST_CASE("ring and homomorphism documents") {
  FiniteRing z4 = io::parse_ring(R"({"zmod": 4})");
  FiniteRing z2 = io::parse_ring(R"({"zmod": 2})");
  CHECK(z4.size == 4);

  RingHom f = io::parse_ring_hom(R"({"map": [0, 1, 0, 1]})", z4, z2);
  CHECK(f.surjective());
  CHECK(f.kernel().size() == 2);

  // explicit tables agreeing with Z/2
  FiniteRing z2e = io::parse_ring(
      R"({"size": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]], "one": 1})");
  CHECK(z2e.size == 2);

  // not additive: 1+1 must map to f(1)+f(1)
  CHECK_THROWS_AS(io::parse_ring_hom(R"({"map": [0, 1, 1, 1]})", z4, z2),
                  validation_error);
}
