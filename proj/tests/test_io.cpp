#include "doctest.h"
#include "gradalg/catalog.hpp"
#include "gradalg/constructions.hpp"
#include "gradalg/error.hpp"
#include "gradalg/group_algebra.hpp"
#include "gradalg/io.hpp"
#include "gradalg/regrading.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gradalg;
namespace fs = std::filesystem;
using io::json;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path data(const std::string& name) { return fs::path(GRADALG_DATA_DIR) / (name + ".json"); }

}  // namespace

TEST_CASE("render and parse round trip every constructible algebra") {
  std::vector<GradedAlgebra> algs;
  for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3)})
    for (const auto& name : catalog::names()) algs.push_back(*catalog::algebra(name, f));
  algs.push_back(zero_algebra(Field::rationals()));
  algs.push_back(direct_sum({*catalog::three_dim_z2(Field::rationals()), *catalog::dual_numbers_z2(Field::rationals())}));
  algs.push_back(*tilde_product(Field::prime(3), make_cyclic(2), make_cyclic(3)).algebra);
  algs.push_back(group_algebra(Field::prime(5), make_dihedral(4)));
  algs.push_back(*K_phi(catalog::group_algebra_named("z2", Field::rationals()),
                        GroupHom::from_generators(Group(make_cyclic(4)), Group(make_cyclic(2)),
                                                  {Group(make_cyclic(4)).element(1)},
                                                  {Group(make_cyclic(2)).element(1)}))
                      .algebra);
  for (const auto& a : algs) {
    const std::string text = io::render_algebra(a);
    auto b = io::parse_algebra(text);
    CHECK(b == a);
    CHECK(b.labels() == a.labels());
    // Rendering is canonical.
    CHECK(io::render_algebra(b) == text);
  }
}

TEST_CASE("bundled documents match the catalog") {
  for (const auto& name : catalog::names()) {
    REQUIRE(fs::exists(data(name)));
    auto a = io::parse_algebra(slurp(data(name)));
    CHECK(a == *catalog::algebra(name, Field::rationals()));
  }
}

TEST_CASE("the bundled M2 document") {
  auto a = io::parse_algebra(slurp(data("m2_gamma1")));
  CHECK(a.dim() == 4);
  CHECK(a.group().kind() == Group::Kind::FreeAbelian);
  CHECK(a.support().size() == 3);
}

TEST_CASE("an empty basis parses to the zero algebra") {
  auto a = io::parse_algebra(R"({"field": {"kind": "Q"}, "group": {"kind": "cyclic", "n": 1},
                                 "basis": [], "degrees": [], "products": []})");
  CHECK(a.dim() == 0);
  CHECK(a == zero_algebra(Field::rationals()));
}

TEST_CASE("syntax errors carry line and column") {
  try {
    io::parse_algebra("{\n  \"field\": {\"kind\": \"Q\"},\n  \"group\": [1, 2,\n}");
    FAIL("no error");
  } catch (const io::ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 4", 0) == 0);
  }
}

TEST_CASE("shape errors carry the JSON path") {
  json j = io::parse_json(slurp(data("m2_gamma1")));
  j["products"][2][1] = "x";
  try {
    io::algebra_from_json(j);
    FAIL("no error");
  } catch (const io::ParseError& e) {
    CHECK(std::string(e.what()).rfind("products[2][1]", 0) == 0);
  }
  json k = io::parse_json(slurp(data("m2_gamma1")));
  k["degrees"].erase(0);
  CHECK_THROWS_AS(io::algebra_from_json(k), io::ParseError);
  json f = io::parse_json(slurp(data("m2_gamma1")));
  f["field"] = {{"kind", "GF"}, {"p", 6}};
  CHECK_THROWS_AS(io::algebra_from_json(f), InputError);
}

TEST_CASE("grading violations name the basis triple") {
  json j = io::parse_json(slurp(data("m2_gamma1")));
  // Move e12 into degree 0; e12 * e21 = e11 still lands in degree 0 but
  // e11 * e12 = e12 now has the wrong degree.
  j["degrees"][1] = 0;
  CHECK_THROWS_AS(io::algebra_from_json(j), InputError);
  auto unchecked = io::algebra_from_json(j, false);
  auto r = verify_grading(unchecked);
  CHECK_FALSE(r.ok);
  CHECK(r.triple.has_value());
  CHECK(r.message.find("e1") != std::string::npos);
}

TEST_CASE("groups and elements") {
  for (const Group& g : {Group(make_cyclic(4)), Group(make_symmetric(3)), Group(make_symmetric(4)),
                         Group(make_dihedral(3)), Group::free_abelian(2), Group::free(2, {"x", "y"}),
                         Group(make_product(make_cyclic(2), make_cyclic(2)))}) {
    Group back = io::group_from_json(io::group_to_json(g));
    CHECK(back == g);
    if (g.is_finite())
      for (const auto& e : g.elements()) CHECK(io::element_from_json(g, io::element_to_json(g, e)) == e);
  }
  Group s3(make_symmetric(3));
  CHECK(io::group_to_json(s3)["kind"] == "symmetric");
  CHECK(io::element_from_json(s3, "(123)") == s3.element(*s3.table().find("(123)")));
  Group f = Group::free(2);
  CHECK(io::element_from_json(f, "g1 g2^-1") == f.from_word(Word({1, -2})));
  CHECK(io::group_from_json(json{{"kind", "product"}, {"factors", {{{"kind", "cyclic"}, {"n", 2}}, {{"kind", "cyclic"}, {"n", 3}}}}})
            .order() == 6);
  CHECK_THROWS_AS(io::group_from_json(json{{"kind", "cyclic"}, {"n", 0}}), InputError);
  CHECK_THROWS_AS(io::group_from_json(json{{"kind", "cayley"}, {"table", {{0, 1}, {1, 1}}}, {"identity", 0}}),
                  InputError);
}

TEST_CASE("scalars are strings") {
  const Field q = Field::rationals();
  CHECK(io::scalar_to_json(Scalar::parse(q, "-3/6")) == "-1/2");
  CHECK(io::scalar_from_json(q, "4/2") == Scalar::from_int(q, 2));
  CHECK(io::scalar_from_json(q, 3) == Scalar::from_int(q, 3));
  CHECK(io::scalar_to_json(Scalar::from_int(Field::prime(3), 5)) == "2");
  CHECK_THROWS_AS(io::scalar_from_json(q, 0.5), InputError);
}

TEST_CASE("hom documents") {
  auto a = catalog::three_dim_z2(Field::rationals());
  auto phi = catalog::shift_endomorphism(a);
  json j = io::hom_to_json(phi);
  auto back = io::hom_from_json(j);
  CHECK(back == phi);
  j["matrix"][0][0] = "2";
  CHECK_THROWS_AS(io::hom_from_json(j), NotAHomError);
  json u = io::hom_to_json(GradedMorphism::zero(a, a));
  u["unital"] = true;
  CHECK_THROWS_AS(io::hom_from_json(u), InputError);

  // Paths resolve against the base directory.
  json byref = io::hom_to_json(GradedMorphism::identity(catalog::ground_field(Field::rationals())));
  byref["domain"] = "ground_field.json";
  byref["codomain"] = "ground_field.json";
  CHECK(io::hom_from_json(byref, GRADALG_DATA_DIR).matrix().rows() == 1);
}

TEST_CASE("group hom documents") {
  Group z4(make_cyclic(4)), z2(make_cyclic(2));
  auto h = GroupHom::from_generators(z4, z2, {z4.element(1)}, {z2.element(1)});
  CHECK(io::group_hom_from_json(io::group_hom_to_json(h)) == h);
  json gens = {{"domain", io::group_to_json(z4)}, {"codomain", io::group_to_json(z2)},
               {"generators", {1}}, {"images", {1}}};
  CHECK(io::group_hom_from_json(gens) == h);
  json bad = {{"domain", io::group_to_json(z2)}, {"codomain", io::group_to_json(z4)},
              {"generators", {1}}, {"images", {1}}};
  CHECK_THROWS_AS(io::group_hom_from_json(bad), InputError);
}
