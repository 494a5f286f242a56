#include "doctest.h"
#include "gradalg/algebra.hpp"
#include "gradalg/catalog.hpp"
#include "gradalg/constructions.hpp"
#include "gradalg/error.hpp"
#include "gradalg/free_algebra.hpp"
#include "oracles.hpp"

#include <random>

using namespace gradalg;

namespace {

const Field Q = Field::rationals();

}  // namespace

TEST_CASE("every catalog algebra verifies over Q, GF(2), GF(3)") {
  for (Field f : {Q, Field::prime(2), Field::prime(3)})
    for (const auto& name : catalog::names()) {
      auto a = catalog::algebra(name, f);
      auto r = verify_grading(*a);
      CHECK_MESSAGE(r.ok, name << ": " << r.message);
    }
  CHECK_THROWS_AS(catalog::algebra("nope", Q), InputError);
}

TEST_CASE("M2 with the elementary grading") {
  Group z = Group::free_abelian(1);
  auto m = matrix_algebra_elementary(Q, z, {z.from_vector({1}), z.from_vector({0})});
  CHECK(m.dim() == 4);
  CHECK(m.labels() == std::vector<std::string>{"e11", "e12", "e21", "e22"});
  CHECK(z.format(m.degree(m.index_of("e12"))) == "1");
  CHECK(z.format(m.degree(m.index_of("e21"))) == "-1");
  CHECK(m.support().size() == 3);
  // 7 of the 9 support pairs have nonzero products; e12 e12 and e21 e21 vanish.
  CHECK(m.pair_set().size() == 7);
  CHECK(m.is_unital());
  Vector e12 = m.basis_vector(m.index_of("e12")), e21 = m.basis_vector(m.index_of("e21"));
  CHECK(m.format(m.multiply(e12, e21)) == "e11");
  CHECK(m.multiply(*m.unit(), e12) == e12);
}

TEST_CASE("group algebras multiply like the group") {
  FiniteGroup s3 = make_symmetric(3);
  auto a = group_algebra(Field::prime(3), s3);
  CHECK(a.dim() == 6);
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) CHECK(a.product(x, y) == a.basis_vector(s3.mul(x, y)));
  CHECK(verify_grading(a).ok);
  CHECK(a.pair_set().size() == 36);
}

TEST_CASE("verify_grading names the offending triple") {
  AlgebraBuilder b(Q, Group(make_cyclic(2)));
  b.add("1", Group(make_cyclic(2)).element(0));
  b.add("a", Group(make_cyclic(2)).element(1));
  b.unit("1");
  b.set("a", "a", {{"a", 1}});  // a*a lands in degree 0, not 1
  auto r = verify_grading(b.build_unchecked());
  CHECK_FALSE(r.ok);
  REQUIRE(r.triple.has_value());
  CHECK((*r.triple)[0] == 1);
  CHECK((*r.triple)[1] == 1);
  CHECK((*r.triple)[2] == 1);
  CHECK_THROWS_AS(b.build(), InputError);
}

TEST_CASE("verify_grading rejects non-associative products and fake units") {
  Group t;
  AlgebraBuilder b(Q, t);
  b.add("x", t.identity());
  b.add("y", t.identity());
  b.set("x", "x", {{"y", 1}});
  b.set("x", "y", {{"x", 1}});
  // (xx)x = yx = 0 but x(xx) = xy = x.
  CHECK_FALSE(verify_grading(b.build_unchecked()).ok);

  AlgebraBuilder u(Q, t);
  u.add("x", t.identity());
  u.add("n", t.identity());
  u.set("x", "x", {{"x", 1}});
  u.unit_element(unit_vector(Q, 2, 0));  // x * n = 0, so x is no unit
  auto r = verify_grading(u.build_unchecked());
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.message.empty());
}

TEST_CASE("associativity holds for random elements of catalog algebras") {
  std::mt19937 rng(1);
  for (const auto& name : catalog::names()) {
    auto a = catalog::algebra(name, Field::prime(3));
    auto rnd = [&] {
      Vector v;
      for (std::size_t i = 0; i < a->dim(); ++i) v.push_back(oracle::random_scalar(a->field(), rng));
      return v;
    };
    for (int t = 0; t < 5; ++t) {
      Vector x = rnd(), y = rnd(), z = rnd();
      CHECK(a->multiply(a->multiply(x, y), z) == a->multiply(x, a->multiply(y, z)));
      if (a->unit()) CHECK(a->multiply(*a->unit(), x) == x);
    }
    // Homogeneous times homogeneous is homogeneous of the product degree.
    for (const auto& g : a->support())
      for (const auto& h : a->support()) {
        Vector p = a->multiply(oracle::random_homogeneous(*a, g, rng), oracle::random_homogeneous(*a, h, rng));
        if (!is_zero(p)) CHECK(*a->homogeneous_degree(p) == a->group().multiply(g, h));
      }
  }
}

TEST_CASE("direct sums and trivial gradings") {
  auto a = catalog::three_dim_z2(Q);
  auto s = direct_sum({*a, *a});
  CHECK(s.dim() == 6);
  CHECK(s.label(0) == "1.1");
  CHECK_FALSE(s.is_unital());
  CHECK(verify_grading(s).ok);
  CHECK(s.support() == a->support());
  auto t = trivial_grading(*a);
  CHECK(has_trivial_grading(t));
  CHECK(t.support().size() == 1);
  auto p = direct_product_trivial(t, t);
  CHECK(p.dim() == 6);
  CHECK(p.is_unital());
  CHECK(verify_grading(p).ok);
  CHECK_THROWS_AS(direct_product_trivial(*a, t), InputError);
  CHECK(zero_algebra(Q).dim() == 0);
  CHECK(verify_grading(zero_algebra(Q)).ok);
}

TEST_CASE("quotients by homogeneous and inhomogeneous ideals") {
  auto a = catalog::z4_four_dim(Q);
  auto hom = quotient(*a, {a->element({{"a2", 1}})});
  CHECK(hom.algebra.dim() == 3);
  CHECK_FALSE(has_trivial_grading(hom.algebra));
  CHECK(verify_grading(hom.algebra).ok);
  auto mixed = quotient(*a, {a->element({{"a1", 1}, {"a2", 1}, {"a3", 1}})});
  CHECK(mixed.algebra.dim() == 3);
  CHECK(has_trivial_grading(mixed.algebra));
  CHECK(mixed.projection.rows() == 3);
  CHECK(mixed.projection.cols() == 4);
  // The ideal generated by 1 is everything.
  CHECK(generated_ideal(*a, {*a->unit()}).dim() == 4);
}

TEST_CASE("free algebra words and degrees") {
  CHECK(words_up_to(2, 3).size() == 2 + 4 + 8);
  CHECK(words_up_to(3, 2, 0).size() == 1 + 3 + 9);
  auto x = FreeGradedAlgebra::one_variable(false, 3);
  CHECK(x.vanishes({0, 0, 0}));
  CHECK_FALSE(x.vanishes({0, 0}));
  CHECK(x.vanishes({}));
  CHECK(x.group.format(x.word_degree({0, 0})) == "2");
  CHECK(FreeGradedAlgebra::one_variable(true).vanishes({}) == false);
}

TEST_CASE("free morphisms evaluate products of images") {
  auto a = catalog::m2_gamma1(Q);
  Group z = a->group();
  FreeGradedAlgebra src{z, {"p", "q"}, {z.from_vector({1}), z.from_vector({-1})}, false, std::nullopt};
  FreeMorphism m(src, a, {a->basis_vector(a->index_of("e12")), a->basis_vector(a->index_of("e21"))});
  CHECK(a->format(m.evaluate({0, 1})) == "e11");
  CHECK(is_zero(m.evaluate({0, 0})));
  CHECK(m.well_defined());
  CHECK(m.is_graded_up_to(4));
  // p and pqp both land on e12, and pp maps to zero.
  CHECK(m.is_graded_injective_up_to(1));
  CHECK_FALSE(m.is_graded_injective_up_to(3));

  PointedGradedSet xs{z, {"p"}, {z.from_vector({1})}};
  CHECK_THROWS_AS(free_extend(xs, a, {a->basis_vector(a->index_of("e21"))}), InputError);
  auto l = free_extend(xs, a, {a->basis_vector(a->index_of("e12"))});
  CHECK(l.images().size() == 1);
  CHECK_FALSE(l.source().unital);
}

TEST_CASE("unital free morphisms must send the empty word to the unit") {
  auto a = catalog::dual_numbers_z2(Q);
  auto x = FreeGradedAlgebra::one_variable(true, 2);
  x.group = a->group();
  x.degrees = {a->group().element(1)};
  FreeMorphism good(x, a, {a->basis_vector(a->index_of("a"))});
  CHECK(good.evaluate({}) == *a->unit());
  CHECK(good.well_defined());
  FreeMorphism bad(x, a, {a->basis_vector(a->index_of("1"))});
  CHECK_FALSE(bad.well_defined());  // 1^2 != 0
}
