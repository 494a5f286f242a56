#include "doctest.h"
#include "gradalg/catalog.hpp"
#include "gradalg/support_category.hpp"
#include "oracles.hpp"

#include <random>

using namespace gradalg;

namespace {

const Field Q = Field::rationals();

}  // namespace

TEST_CASE("L on objects") {
  auto fg = catalog::group_algebra_named("s3", Q);
  auto t = L_object(*fg);
  CHECK(t.violation().empty());
  CHECK(t.support.size() == 6);
  CHECK(t.pairs.size() == 36);

  auto m2 = catalog::m2_gamma1(Q);
  auto l = L_object(*m2);
  CHECK(format_support(l.group, l.support) == "{-1, 0, 1}");
  CHECK(l.pairs.size() == 7);
  CHECK(L_object(*catalog::ground_field(Q)).support.size() == 1);
}

TEST_CASE("malformed triples report violations") {
  Group z = Group::free_abelian(1);
  SupportTriple t{z, {z.from_vector({1})}, {{z.from_vector({1}), z.from_vector({1})}}};
  CHECK_FALSE(t.violation().empty());  // 1 + 1 = 2 is outside S
  SupportTriple u{z, {z.from_vector({0})}, {{z.from_vector({0}), z.from_vector({1})}}};
  CHECK_FALSE(u.violation().empty());  // pair leaves S x S
}

TEST_CASE("L on morphisms, identities and the order") {
  auto a = catalog::three_dim_z2(Q);
  auto phi = catalog::shift_endomorphism(a);
  auto id = GradedMorphism::identity(a);
  CHECK(L_morphism(id) == triple_identity(L_object(*a)));
  auto l = L_morphism(phi);
  CHECK(l.violation().empty());
  CHECK(triple_leq(l, l));
  auto l2 = L_morphism(compose(phi, phi));
  auto ll = triple_compose(l, l);
  CHECK(triple_leq(l2, ll));
  CHECK_FALSE(triple_leq(ll, l2));
  auto d = triple_defect(l2, ll);
  CHECK_FALSE(d.empty());
  CHECK(d.missing_domain.size() == 1);
  CHECK(triple_defect(l, l).empty());
  // The zero map has empty R.
  auto z = L_morphism(GradedMorphism::zero(a, a));
  CHECK(z.domain.empty());
  CHECK(z.pairs.empty());
  CHECK(triple_leq(z, l));
}

TEST_CASE("oplax inequality and category laws on random composites") {
  std::mt19937 rng(17);
  for (Field f : {Q, Field::prime(2), Field::prime(3)}) {
    auto pool = oracle::hom_pool(f, 12);
    const std::size_t n = pool.algebras.size();
    std::size_t checked = 0;
    for (int t = 0; t < 200; ++t) {
      std::size_t i = rng() % n, j = rng() % n, k = rng() % n, m = rng() % n;
      const auto &hij = pool.homs[i][j], &hjk = pool.homs[j][k], &hkm = pool.homs[k][m];
      if (hij.empty() || hjk.empty() || hkm.empty()) continue;
      const auto& f1 = hij[rng() % hij.size()];
      const auto& f2 = hjk[rng() % hjk.size()];
      const auto& f3 = hkm[rng() % hkm.size()];
      auto l1 = L_morphism(f1), l2 = L_morphism(f2), l3 = L_morphism(f3);
      CHECK(l1.violation().empty());
      CHECK(triple_leq(L_morphism(compose(f2, f1)), triple_compose(l2, l1)));
      CHECK(triple_compose(l3, triple_compose(l2, l1)) == triple_compose(triple_compose(l3, l2), l1));
      CHECK(triple_compose(l1, triple_identity(l1.source)) == l1);
      CHECK(triple_compose(triple_identity(l1.target), l1) == l1);
      ++checked;
    }
    CHECK(checked > 40);
  }
}
