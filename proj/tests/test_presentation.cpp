#include "doctest.h"
#include "gradalg/catalog.hpp"
#include "gradalg/presentation.hpp"
#include "gradalg/universal.hpp"

#include <set>

using namespace gradalg;

namespace {

Word w(std::vector<int> letters) { return Word(std::move(letters)); }

Word power(int g, int n) { return Word(std::vector<int>(static_cast<std::size_t>(n), g)); }

PresentedGroup cyclic(int n) { return PresentedGroup(1, {power(1, n)}); }

PresentedGroup dihedral(int n) {
  return PresentedGroup(2, {power(1, n), power(2, 2), w({1, 2, 1, 2})});
}

}  // namespace

TEST_CASE("presentations keep reduced relators in order") {
  PresentedGroup p(2, {w({1, 2, -2}), w({}), w({2, 1, -2})});
  REQUIRE(p.relators().size() == 2);
  CHECK(p.relators()[0] == w({1}));
  CHECK(p.relators()[1] == w({1}));
  CHECK(p.to_string() == "<g1, g2 | g1, g1>");
}

TEST_CASE("abelianization from Smith form") {
  CHECK(abelianization(cyclic(6)) == Abelianization{0, {6}});
  CHECK(abelianization(PresentedGroup(2, {})) == Abelianization{2, {}});
  CHECK(abelianization(dihedral(4)) == Abelianization{0, {2, 2}});
  CHECK(abelianization(dihedral(3)) == Abelianization{0, {2}});
  // Z/4 x Z/6 = Z/2 x Z/12.
  CHECK(abelianization(PresentedGroup(2, {power(1, 4), power(2, 6), w({1, 2, -1, -2})})) ==
        Abelianization{0, {2, 12}});
  CHECK(abelianization(PresentedGroup(3, {w({1, 2, -1, -2})})).free_rank == 3);
}

TEST_CASE("coset enumeration orders of known groups") {
  for (int n = 1; n <= 12; ++n) {
    auto e = todd_coxeter(cyclic(n), 1000);
    REQUIRE(e.has_value());
    CHECK(e->order == static_cast<std::size_t>(n));
  }
  for (int n = 2; n <= 6; ++n) {
    auto e = todd_coxeter(dihedral(n), 1000);
    REQUIRE(e.has_value());
    CHECK(e->order == static_cast<std::size_t>(2 * n));
  }
  // S3 and S4 as Coxeter groups, A4, Q8.
  auto s3 = todd_coxeter(PresentedGroup(2, {power(1, 2), power(2, 2), w({1, 2, 1, 2, 1, 2})}), 1000);
  REQUIRE(s3);
  CHECK(s3->order == 6);
  auto s4 = todd_coxeter(PresentedGroup(2, {power(1, 2), power(2, 3), w({1, 2, 1, 2, 1, 2, 1, 2})}), 1000);
  REQUIRE(s4);
  CHECK(s4->order == 24);
  auto a4 = todd_coxeter(PresentedGroup(2, {power(1, 2), power(2, 3), w({1, 2, 1, 2, 1, 2})}), 1000);
  REQUIRE(a4);
  CHECK(a4->order == 12);
  auto q8 = todd_coxeter(PresentedGroup(2, {power(1, 4), w({1, 1, -2, -2}), w({-2, 1, 2, 1})}), 1000);
  REQUIRE(q8);
  CHECK(q8->order == 8);
  // The free group never closes.
  CHECK_FALSE(todd_coxeter(PresentedGroup(1, {}), 200).has_value());
}

TEST_CASE("coset tables are permutations satisfying the relators") {
  auto p = dihedral(5);
  auto e = todd_coxeter(p, 1000);
  REQUIRE(e);
  for (const auto& perm : e->generator_perms) CHECK(std::set<std::size_t>(perm.begin(), perm.end()).size() == e->order);
  for (const auto& r : p.relators()) {
    auto a = act(*e, r);
    for (std::size_t c = 0; c < e->order; ++c) CHECK(a[c] == c);
  }
  // Coset representatives reach their own cosets from coset 0.
  for (std::size_t c = 0; c < e->order; ++c) CHECK(act(*e, e->coset_reps[c])[0] == c);
}

TEST_CASE("Tietze simplification preserves abelianization") {
  std::vector<PresentedGroup> ps{cyclic(4), dihedral(4), PresentedGroup(3, {w({1, 2, -3}), w({3, 3})}),
                                 PresentedGroup(3, {w({1, 2, -3}), w({1, 3, -2}), w({2, 3, -1})})};
  for (const auto& name : catalog::names())
    ps.push_back(universal_group(*catalog::algebra(name, Field::rationals())).presentation);
  for (const auto& p : ps) {
    auto t = tietze_simplify(p);
    CHECK_FALSE(t.budget_exhausted);
    CHECK(t.presentation.generator_count() <= p.generator_count());
    CHECK(abelianization(t.presentation) == abelianization(p));
  }
  // Eliminating c from <a, b, c | ab = c, c^2> leaves <a, b | (ab)^2>.
  auto t = tietze_simplify(PresentedGroup(3, {w({1, 2, -3}), w({3, 3})}));
  CHECK(t.presentation.generator_count() == 2);
}

TEST_CASE("identify classifies small presentations") {
  CHECK(identify(PresentedGroup(2, {w({1}), w({2})})).kind == Identification::Kind::Trivial);
  auto f = identify(PresentedGroup(3, {w({1, 2, -3})}));
  CHECK(f.kind == Identification::Kind::Free);
  CHECK(f.rank == 2);
  CHECK(f.verdict() == "free of rank 2");
  auto d = identify(dihedral(6));
  CHECK(d.kind == Identification::Kind::Finite);
  CHECK(d.order == 12);
  CHECK(d.verdict() == "finite of order 12");
  // Budget too small to certify.
  CHECK(identify(dihedral(6), 3).kind == Identification::Kind::Unknown);
}

TEST_CASE("relabeling search") {
  PresentedGroup a(3, {w({1, 2, -3}), w({1, 1})});
  PresentedGroup b(3, {w({2, 2}), w({2, 3, -1})});
  auto perm = find_relabeling(a, b);
  REQUIRE(perm.has_value());
  CHECK(equal_under_relabeling(a, b, *perm));
  CHECK(*perm == std::vector<std::size_t>{1, 2, 0});
  CHECK_FALSE(find_relabeling(a, PresentedGroup(3, {w({2, 2}), w({2, 3, 1})})).has_value());
}
