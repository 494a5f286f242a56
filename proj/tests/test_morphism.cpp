#include "doctest.h"
#include "gradalg/catalog.hpp"
#include "gradalg/constructions.hpp"
#include "gradalg/equivalence.hpp"
#include "gradalg/error.hpp"
#include "gradalg/hom_search.hpp"
#include "gradalg/morphism.hpp"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace gradalg;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

// Counts graded homs A -> B over GF(2) by trying all 2^(dim A * dim B)
// matrices. Gradedness is checked directly on the degrees of the nonzero
// matrix entries.
std::size_t brute_graded_homs(const GradedAlgebra& a, const GradedAlgebra& b, bool unital) {
  const std::size_t n = a.dim(), m = b.dim(), cells = n * m;
  std::size_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    Matrix x(F2, m, n);
    for (std::size_t c = 0; c < cells; ++c)
      if ((bits >> c) & 1) x.set(c / n, c % n, Scalar::one(F2));
    bool graded = true;
    for (const auto& [g, idx] : a.components()) {
      std::set<GroupElement> targets;
      for (std::size_t i : idx)
        for (std::size_t r = 0; r < m; ++r)
          if (!x(r, i).is_zero()) targets.insert(b.degree(r));
      graded = graded && targets.size() <= 1;
    }
    if (!graded) continue;
    bool mult = true;
    for (std::size_t i = 0; i < n && mult; ++i)
      for (std::size_t j = 0; j < n && mult; ++j)
        mult = x.apply(a.product(i, j)) == b.multiply(x.column(i), x.column(j));
    if (!mult) continue;
    if (unital && !(a.unit() && b.unit() && x.apply(*a.unit()) == *b.unit())) continue;
    ++count;
  }
  return count;
}

GradedMorphism by_labels(const AlgebraPtr& a, const AlgebraPtr& b,
                         const std::vector<std::pair<std::string, catalog::Terms>>& images) {
  return catalog::map_by_labels(a, b, images);
}

}  // namespace

TEST_CASE("analyze rejects non-multiplicative maps") {
  auto a = catalog::dual_numbers_z2(Q);
  Matrix twice = Matrix::identity(Q, 2);
  twice.set(0, 0, Scalar::from_int(Q, 2));
  CHECK_THROWS_AS(GradedMorphism::analyze(a, a, twice), NotAHomError);
  try {
    GradedMorphism::analyze(a, a, twice);
  } catch (const NotAHomError& e) {
    CHECK(std::string(e.what()).find("f(1*1)") != std::string::npos);
  }
  CHECK_THROWS_AS(GradedMorphism::analyze(a, a, Matrix::identity(Q, 3)), InputError);
}

TEST_CASE("identity, zero and composition") {
  auto a = catalog::three_dim_z2(Q);
  auto id = GradedMorphism::identity(a);
  auto phi = catalog::shift_endomorphism(a);
  CHECK(id.is_unital());
  CHECK(id.is_graded());
  CHECK(id.is_injective());
  CHECK(compose(phi, id) == phi);
  CHECK(compose(id, phi) == phi);
  auto z = GradedMorphism::zero(a, a);
  CHECK(z.is_graded());
  CHECK(z.psi().empty());
  CHECK(compose(phi, phi).matrix() == phi.matrix() * phi.matrix());
  CHECK(phi.kernel().dim() == 1);
  CHECK(phi.psi().size() == 2);
  CHECK_THROWS_AS(compose(id, GradedMorphism::identity(catalog::ground_field(Q))), InputError);
}

TEST_CASE("graded hom search agrees with brute force over GF(2)") {
  std::vector<AlgebraPtr> algs{catalog::ground_field(F2), catalog::dual_numbers_z2(F2),
                               catalog::dual_numbers_trivial(F2), catalog::group_algebra_named("z2", F2),
                               catalog::three_dim_z2(F2), catalog::z3_three_dim(F2)};
  for (const auto& a : algs)
    for (const auto& b : algs) {
      if (a->dim() * b->dim() > 12) continue;
      for (bool unital : {false, true}) {
        HomSearchOptions opt;
        opt.unital = unital;
        auto r = enumerate_graded_homs(a, b, opt);
        CHECK(r.complete);
        CHECK(r.homs.size() == brute_graded_homs(*a, *b, unital));
        for (const auto& h : r.homs) {
          CHECK(h.is_graded());
          if (unital) CHECK(h.is_unital());
        }
      }
    }
}

TEST_CASE("hom search options") {
  auto a = catalog::group_algebra_named("z3", Field::prime(3));
  HomSearchOptions inj;
  inj.blocks = HomSearchOptions::Blocks::Injective;
  inj.allow_zero_components = false;
  auto r = enumerate_graded_homs(a, a, inj);
  // u_g -> u_psi(g) for the three endomorphisms psi of Z/3; every
  // character into GF(3)^x is trivial.
  CHECK(r.homs.size() == 3);
  HomSearchOptions lim;
  lim.limit = 2;
  auto l = enumerate_graded_homs(a, a, lim);
  CHECK(l.homs.size() == 2);
  CHECK_FALSE(l.complete);
  HomSearchOptions budget;
  budget.node_budget = 3;
  CHECK_FALSE(enumerate_graded_homs(a, a, budget).complete);
  HomSearchOptions forced;
  forced.forced_target = [](const GroupElement& g) { return std::optional<GroupElement>(g); };
  forced.allow_zero_components = false;
  // Degree-preserving automorphisms: u_1 -> alpha u_1 with alpha^3 = 1, so alpha = 1.
  CHECK(enumerate_graded_homs(a, a, forced).homs.size() == 1);
}

TEST_CASE("graded injectivity and the monomorphism criterion") {
  auto fg = catalog::group_algebra_named("z2", Q);
  auto f = catalog::ground_field(Q);
  auto aug = by_labels(fg, f, {{"u_0", {{"u_0", 1}}}, {"u_1", {{"u_0", 1}}}});
  CHECK(graded_injectivity(aug).ok);
  auto mono = mono_check(aug);
  CHECK_FALSE(mono.mono);
  REQUIRE(mono.refuting_pair);
  CHECK(aug.apply(mono.refuting_pair->first) == aug.apply(mono.refuting_pair->second));

  auto a = catalog::three_dim_z2(Q);
  auto phi = catalog::shift_endomorphism(a);
  auto gi = graded_injectivity(phi);
  CHECK_FALSE(gi.ok);
  REQUIRE(gi.witness);
  CHECK(is_zero(phi.apply(*gi.witness)));
  CHECK(a->homogeneous_degree(*gi.witness) == gi.degree);
  CHECK(mono_check(GradedMorphism::identity(a)).mono);
}

TEST_CASE("mono_refute builds distinct morphisms with equal composites") {
  auto fg = catalog::group_algebra_named("z2", Field::prime(3));
  auto f = catalog::ground_field(Field::prime(3));
  auto aug = by_labels(fg, f, {{"u_0", {{"u_0", 1}}}, {"u_1", {{"u_0", 1}}}});
  Vector u0 = fg->basis_vector(0), u1 = fg->basis_vector(1);
  for (bool unital : {false, true}) {
    auto amb = mono_refute(aug, u0, u1, MonoMode::Ambient, unital);
    CHECK_FALSE(amb.lambda == amb.mu);
    CHECK(compose(aug, amb.lambda) == compose(aug, amb.mu));
    auto tilde = mono_refute(aug, u0, u1, MonoMode::Tilde, unital);
    CHECK(tilde.graded_injective_certified);
    CHECK(compose(aug, tilde.lambda) == compose(aug, tilde.mu));
  }
  CHECK_THROWS_AS(mono_refute(aug, u0, u0), InputError);
}

TEST_CASE("equalizers factor exactly the equalizing maps") {
  auto a = catalog::three_dim_z2(Q);
  auto id = GradedMorphism::identity(a);
  auto phi = catalog::shift_endomorphism(a);
  Equalizer e(id, phi);
  // x = phi(x) on components: only multiples of 1 survive.
  CHECK(e.algebra()->dim() == 1);
  CHECK(verify_grading(*e.algebra()).ok);
  CHECK(e.inclusion().is_injective());
  auto unit_map = GradedMorphism::analyze(catalog::ground_field(Q), a, Matrix::from_columns(Q, 3, {*a->unit()}));
  auto u = e.factor(unit_map);
  CHECK(compose(e.inclusion(), u) == unit_map);
  CHECK_THROWS_AS(e.factor(id), InputError);
  Equalizer same(phi, phi);
  CHECK(same.algebra()->dim() == 3);
}

TEST_CASE("equivalence checks") {
  auto g1 = catalog::m2_gamma1(Q);
  auto g2 = catalog::m2_gamma2_s3(Q);
  auto id = GradedMorphism::analyze(g1, g2, Matrix::identity(Q, 4));
  auto r = check_weak_equivalence(id);
  CHECK(r.ok);
  CHECK(r.psi.size() == 3);
  CHECK(check_isomorphism(GradedMorphism::identity(g1)).ok);
  CHECK_FALSE(check_isomorphism(id).ok);  // different grading groups
  auto same = GradedMorphism::identity(g2);
  CHECK(check_equivalence(same, GroupHom::identity(g2->group())).ok);
  CHECK_THROWS_AS(check_isomorphism(GradedMorphism::zero(g1, g1)), InputError);
}

TEST_CASE("weak equivalence search") {
  for (Field f : {Field::prime(2), Field::prime(3)}) {
    auto r = search_weak_equivalence(catalog::m2_gamma1(f), catalog::m2_gamma2_s3(f));
    REQUIRE(r.status == WeakEquivalenceSearch::Status::Certificate);
    REQUIRE(r.certificate);
    CHECK(check_weak_equivalence(*r.certificate).ok);
  }
  auto none = search_weak_equivalence(catalog::group_algebra_named("z2", F2), catalog::dual_numbers_z2(F2));
  CHECK(none.status == WeakEquivalenceSearch::Status::None);
  CHECK_FALSE(none.reason.empty());
  auto dims = search_weak_equivalence(catalog::ground_field(Q), catalog::dual_numbers_z2(Q));
  CHECK(dims.status == WeakEquivalenceSearch::Status::None);
  CHECK(weak_equivalence_search_is_complete(*catalog::m2_gamma1(F2)));
  CHECK_FALSE(weak_equivalence_search_is_complete(*catalog::m2_gamma1(Q)));
}

TEST_CASE("random composites stay multiplicative") {
  std::mt19937 rng(9);
  auto pool = oracle::hom_pool(Field::prime(3), 12);
  const std::size_t n = pool.algebras.size();
  std::size_t checked = 0;
  for (int t = 0; t < 300; ++t) {
    std::size_t i = rng() % n, j = rng() % n, k = rng() % n;
    if (pool.homs[i][j].empty() || pool.homs[j][k].empty()) continue;
    const auto& f = pool.homs[i][j][rng() % pool.homs[i][j].size()];
    const auto& g = pool.homs[j][k][rng() % pool.homs[j][k].size()];
    auto h = compose(g, f);
    CHECK(h.matrix() == g.matrix() * f.matrix());
    CHECK(h.is_graded());
    ++checked;
  }
  CHECK(checked > 50);
}
