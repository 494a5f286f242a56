#include "doctest.h"
#include "gradalg/error.hpp"
#include "gradalg/finite_group.hpp"
#include "gradalg/group.hpp"
#include "gradalg/word.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace gradalg;

namespace {

// Number of maps G -> H that respect the tables, by brute force over all
// |H|^|G| maps. Only for tiny groups.
std::size_t brute_hom_count(const FiniteGroup& g, const FiniteGroup& h) {
  std::vector<std::size_t> img(g.order(), 0);
  std::size_t count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t a = 0; a < g.order() && ok; ++a)
      for (std::size_t b = 0; b < g.order() && ok; ++b) ok = img[g.mul(a, b)] == h.mul(img[a], img[b]);
    count += ok;
    std::size_t k = 0;
    while (k < g.order() && ++img[k] == h.order()) img[k++] = 0;
    if (k == g.order()) break;
  }
  return count;
}

Word random_word(std::mt19937& rng, std::size_t gens, std::size_t len) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < len; ++i) {
    int g = static_cast<int>(rng() % gens) + 1;
    letters.push_back(rng() % 2 ? g : -g);
  }
  return Word(letters);
}

}  // namespace

TEST_CASE("standard finite groups satisfy the axioms") {
  std::vector<FiniteGroup> groups{make_cyclic(1), make_cyclic(5),      make_symmetric(3), make_symmetric(4),
                                  make_dihedral(4), make_dihedral(5), make_product(make_cyclic(2), make_cyclic(3))};
  for (const auto& g : groups) {
    auto check = group_check(g.order(), g.table(), g.identity());
    CHECK(check.ok);
    CHECK(g.closure(g.generators()).size() == g.order());
    for (std::size_t a = 0; a < g.order(); ++a) {
      CHECK(g.mul(a, g.inv(a)) == g.identity());
      CHECK(g.pow(a, static_cast<long>(g.element_order(a))) == g.identity());
      CHECK(g.order() % g.element_order(a) == 0);
    }
  }
  CHECK(make_symmetric(4).order() == 24);
  CHECK_FALSE(make_symmetric(3).is_abelian());
  CHECK(make_product(make_cyclic(2), make_cyclic(3)).is_abelian());
}

TEST_CASE("symmetric group labels and composition") {
  FiniteGroup s3 = make_symmetric(3);
  auto a = s3.find("(12)"), b = s3.find("(23)"), c = s3.find("(123)");
  REQUIRE(a);
  REQUIRE(b);
  REQUIRE(c);
  CHECK(s3.label(s3.identity()) == "e");
  // s*t applies t first: (12)(23) sends 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
  CHECK(s3.label(s3.mul(*a, *b)) == "(123)");
  CHECK(s3.element_order(*c) == 3);
}

TEST_CASE("group table validation names the failure") {
  // Non-associative loop of order 3 with identity 0.
  std::vector<std::size_t> bad{0, 1, 2, 1, 0, 0, 2, 0, 1};
  auto r = group_check(3, bad, 0);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.message.empty());
  CHECK_THROWS_AS(FiniteGroup(3, bad, 0), InputError);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1}, 0), InputError);
}

TEST_CASE("commutator subgroup and abelianization") {
  CHECK(make_symmetric(3).commutator_subgroup().size() == 3);
  CHECK(make_symmetric(3).abelianization_order() == 2);
  CHECK(make_symmetric(4).abelianization_order() == 2);
  CHECK(make_dihedral(4).abelianization_order() == 4);
  CHECK(make_dihedral(4).abelianization_exponent() == 2);
  CHECK(make_dihedral(3).abelianization_order() == 2);
  CHECK(make_cyclic(6).abelianization_exponent() == 6);
  auto v = make_product(make_cyclic(2), make_cyclic(2));
  CHECK(v.abelianization_order() == 4);
  CHECK(v.abelianization_exponent() == 2);
}

TEST_CASE("homomorphism enumeration matches brute force") {
  std::vector<FiniteGroup> small{make_cyclic(1), make_cyclic(2), make_cyclic(3), make_cyclic(4),
                                 make_product(make_cyclic(2), make_cyclic(2)), make_symmetric(3)};
  for (const auto& g : small)
    for (const auto& h : small) {
      auto tables = enumerate_hom_tables(g, h);
      CHECK(tables.size() == brute_hom_count(g, h));
    }
  // |Hom(Z/m, Z/n)| = gcd(m, n).
  for (std::size_t m = 1; m <= 8; ++m)
    for (std::size_t n = 1; n <= 8; ++n)
      CHECK(enumerate_hom_tables(make_cyclic(m), make_cyclic(n)).size() == std::gcd(m, n));
  CHECK(enumerate_hom_tables(make_symmetric(3), make_symmetric(3)).size() == 10);
  CHECK_THROWS_AS(enumerate_hom_tables(make_symmetric(4), make_cyclic(2), 12), BudgetExceeded);
}

TEST_CASE("words are freely reduced") {
  CHECK(Word({1, 2, -2, -1}).empty());
  CHECK(Word({1, 2, -2, 3}).letters() == std::vector<int>{1, 3});
  CHECK_THROWS_AS(Word({1, 0}), InputError);
  CHECK(Word::generator(1, -2).letters() == std::vector<int>{-2, -2});
  CHECK(Word().to_string() == "1");
  CHECK(Word({1, -2}).to_string() == "g1 g2^-1");
  CHECK(cyclically_reduce(Word({2, 1, 3, -2})) == Word({1, 3}));
}

TEST_CASE("free group laws on random words") {
  std::mt19937 rng(7);
  const std::vector<std::string> labels{"a", "b", "c"};
  for (int t = 0; t < 300; ++t) {
    Word u = random_word(rng, 3, rng() % 8), v = random_word(rng, 3, rng() % 8), w = random_word(rng, 3, rng() % 8);
    CHECK((u * v) * w == u * (v * w));
    CHECK((u * u.inverse()).empty());
    CHECK((u * v).inverse() == v.inverse() * u.inverse());
    CHECK(Word::parse(u.to_string(labels), labels) == u);
    for (std::size_t i = 0; i < 3; ++i) CHECK((u * v).exponent_sum(i) == u.exponent_sum(i) + v.exponent_sum(i));
    // Canonical relators ignore rotation and inversion.
    if (!u.empty()) {
      auto l = u.letters();
      std::rotate(l.begin(), l.begin() + static_cast<long>(rng() % l.size()), l.end());
      CHECK(canonical_relator(Word(l)) == canonical_relator(u));
      CHECK(canonical_relator(u.inverse()) == canonical_relator(u));
    }
    // Substitution is a homomorphism.
    Word img = random_word(rng, 3, rng() % 4);
    CHECK(substitute(u * v, 0, img) == substitute(u, 0, img) * substitute(v, 0, img));
  }
}

TEST_CASE("group kinds encode and multiply elements") {
  Group z2 = Group::free_abelian(2);
  auto a = z2.from_vector({1, -2}), b = z2.from_vector({3, 5});
  CHECK(z2.format(z2.multiply(a, b)) == "(4,3)");
  CHECK(z2.is_identity(z2.multiply(a, z2.inverse(a))));
  CHECK(z2.parse("(4,3)") == z2.multiply(a, b));
  CHECK(Group::free_abelian(1).format(Group::free_abelian(1).from_vector({-1})) == "-1");

  Group f2 = Group::free(2, {"x", "y"});
  auto x = f2.element(0), y = f2.element(1);
  auto xy = f2.multiply(x, y);
  CHECK(f2.format(xy) == "x y");
  CHECK(f2.multiply(xy, f2.inverse(y)) == x);
  CHECK(f2.format(f2.power(x, -2)) == "x^-1 x^-1");
  CHECK(f2.parse("y x^-1") == f2.from_word(Word({2, -1})));

  Group s3(make_symmetric(3));
  CHECK(s3.order() == 6);
  CHECK(s3.elements().size() == 6);
  CHECK_FALSE(Group::free(1).order().has_value());
  CHECK_THROWS_AS(Group::free(1).table(), Unsupported);
  CHECK_THROWS_AS(s3.validate(GroupElement{{7}}), InputError);
  CHECK(Group::trivial().order() == 1);
}

TEST_CASE("group homomorphisms") {
  Group z4(make_cyclic(4)), z2(make_cyclic(2));
  auto red = GroupHom::from_generators(z4, z2, {z4.element(1)}, {z2.element(1)});
  CHECK(red.is_homomorphism());
  CHECK_FALSE(red.is_injective());
  CHECK(red.apply(z4.element(3)) == z2.element(1));
  // 1 -> 1 does not extend from Z/2 to Z/4.
  CHECK_THROWS_AS(GroupHom::from_generators(z2, z4, {z2.element(1)}, {z4.element(1)}), InputError);
  auto doubling = GroupHom::from_generators(z2, z4, {z2.element(1)}, {z4.element(2)});
  CHECK(doubling.is_injective());
  CHECK(compose(red, doubling).apply(z2.element(1)) == z2.element(0));
  CHECK(GroupHom::identity(z4).is_bijective());
  CHECK(enumerate_homs(z4, z4).size() == 4);

  Group f = Group::free(2);
  Group s3(make_symmetric(3));
  auto t = s3.table();
  auto h = GroupHom::from_generators(f, s3, {f.element(0), f.element(1)},
                                     {s3.element(*t.find("(12)")), s3.element(*t.find("(23)"))});
  CHECK(s3.format(h.apply(f.from_word(Word({1, 2})))) == "(123)");
}
