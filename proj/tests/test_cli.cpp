#include "doctest.h"
#include "gradalg/catalog.hpp"
#include "gradalg/cli.hpp"
#include "gradalg/error.hpp"
#include "gradalg/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace gradalg;
namespace fs = std::filesystem;
using io::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (fs::path(GRADALG_DATA_DIR) / (name + ".json")).string(); }

// Scratch directory removed at scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("gradalg-cli-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("field specs") {
  CHECK(cli::parse_field_spec("Q") == Field::rationals());
  CHECK(cli::parse_field_spec("GF:3") == Field::prime(3));
  CHECK(cli::parse_field_spec("GF(7)") == Field::prime(7));
  CHECK_THROWS_AS(cli::parse_field_spec("GF:9"), InputError);
  CHECK_THROWS_AS(cli::parse_field_spec("R"), InputError);
  CHECK_THROWS_AS(cli::parse_field_spec("GF:"), InputError);
}

TEST_CASE("check") {
  auto ok = run({"check", data("m2_gamma1")});
  CHECK(ok.code == cli::Ok);
  CHECK(contains(ok.out, "dimension 4"));

  TempDir tmp;
  json j = io::read_json_file(data("m2_gamma1"));
  j["degrees"][1] = 0;
  auto bad = run({"check", tmp.write("corrupted.json", j.dump())});
  CHECK(bad.code == cli::PropertyFalse);
  CHECK(contains(bad.out, "grading violation"));
  CHECK(contains(bad.out, "e12*e21"));

  auto syntax = run({"check", tmp.write("broken.json", "{\n  \"field\": \n")});
  CHECK(syntax.code == cli::BadInput);
  CHECK(contains(syntax.err, "line"));

  CHECK(run({"check", (tmp.path / "missing.json").string()}).code == cli::BadInput);
}

TEST_CASE("support and pairs") {
  auto s = run({"support", data("m2_gamma1")});
  CHECK(s.code == cli::Ok);
  CHECK(s.out == "{-1, 0, 1}\n");
  auto p = run({"pairs", data("m2_gamma1")});
  CHECK(p.code == cli::Ok);
  CHECK(contains(p.out, "(1, -1)"));
}

TEST_CASE("universal-group") {
  auto r = run({"universal-group", data("m2_gamma1"), "--simplify", "--identify"});
  CHECK(r.code == cli::Ok);
  CHECK(contains(r.out, "generators: 3, relators: 7"));
  CHECK(contains(r.out, "identified: free of rank 1"));
  auto s3 = run({"universal-group", data("group_algebra_s3"), "--identify"});
  CHECK(contains(s3.out, "finite of order 6"));
  auto budget = run({"universal-group", data("group_algebra_s3"), "--identify", "--max-cosets", "2"});
  CHECK(budget.code == cli::OutOfBudget);
  CHECK(contains(budget.out, "unknown"));
}

TEST_CASE("weak-equiv") {
  TempDir tmp;
  auto a = tmp.write("a.json", io::render_algebra(*catalog::m2_gamma1(Field::prime(2))));
  auto b = tmp.write("b.json", io::render_algebra(*catalog::m2_gamma2_s3(Field::prime(2))));
  auto r = run({"weak-equiv", a, b});
  CHECK(r.code == cli::Ok);
  CHECK(contains(r.out, "-1 -> (123)"));
  CHECK(contains(r.out, "1 -> (132)"));

  json id = {{"matrix", json::array()}};
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int k = 0; k < 4; ++k) row.push_back(i == k ? "1" : "0");
    id["matrix"].push_back(row);
  }
  auto cert = tmp.write("id.json", id.dump());
  auto c = run({"weak-equiv", data("m2_gamma1"), data("m2_gamma2_s3"), "--certificate", cert});
  CHECK(c.code == cli::Ok);
  CHECK(contains(c.out, "certificate"));

  auto z2 = tmp.write("z2.json", io::render_algebra(*catalog::group_algebra_named("z2", Field::prime(2))));
  auto dn = tmp.write("dn.json", io::render_algebra(*catalog::dual_numbers_z2(Field::prime(2))));
  auto none = run({"weak-equiv", z2, dn});
  CHECK(none.code == cli::PropertyFalse);
  CHECK(contains(none.out, "none"));
}

TEST_CASE("mono, graded-injective and equalizer") {
  TempDir tmp;
  json aug = {{"domain", data("group_algebra_z2")},
              {"codomain", data("ground_field")},
              {"matrix", json::parse(R"([["1", "1"]])")}};
  auto path = tmp.write("aug.json", aug.dump());
  auto m = run({"mono", path});
  CHECK(m.code == cli::PropertyFalse);
  CHECK(contains(m.out, "not a monomorphism"));
  auto g = run({"graded-injective", path});
  CHECK(g.code == cli::Ok);

  json id = {{"matrix", json::parse(R"([["1", "0"], ["0", "1"]])")}};
  json neg = {{"matrix", json::parse(R"([["1", "0"], ["0", "-1"]])")}};
  auto e = run({"equalizer", data("group_algebra_z2"), tmp.write("id.json", id.dump()),
                tmp.write("neg.json", neg.dump())});
  REQUIRE(e.code == cli::Ok);
  json doc = json::parse(e.out);
  CHECK(doc["algebra"]["basis"].size() == 1);
  CHECK(doc["inclusion"].size() == 2);

  json notahom = {{"domain", data("group_algebra_z2")}, {"codomain", data("group_algebra_z2")},
                  {"matrix", json::parse(R"([["2", "0"], ["0", "1"]])")}};
  CHECK(run({"mono", tmp.write("nh.json", notahom.dump())}).code == cli::BadInput);
}

TEST_CASE("regrade and pullback") {
  TempDir tmp;
  json h = {{"domain", {{"kind", "cyclic"}, {"n", 4}}},
            {"codomain", {{"kind", "cyclic"}, {"n", 2}}},
            {"generators", {1}},
            {"images", {1}}};
  auto hom = tmp.write("h.json", h.dump());
  auto r = run({"regrade", data("group_algebra_z4"), "--hom", hom});
  REQUIRE(r.code == cli::Ok);
  auto u = io::parse_algebra(r.out);
  CHECK(u.dim() == 4);
  CHECK(u.support().size() == 2);
  auto p = run({"pullback", data("group_algebra_z2"), "--hom", hom});
  REQUIRE(p.code == cli::Ok);
  CHECK(io::parse_algebra(p.out).dim() == 4);
  // The group map must start at the grading group.
  CHECK(run({"regrade", data("group_algebra_z2"), "--hom", hom}).code == cli::BadInput);
}

TEST_CASE("tilde-product") {
  auto r = run({"tilde-product", "--field", "GF:3", "z2", "z2"});
  REQUIRE(r.code == cli::Ok);
  json doc = json::parse(r.out);
  CHECK(doc["algebra"]["basis"].size() == 8);
  CHECK(doc["unit_generator"] == "2");
  CHECK(run({"tilde-product", "--field", "Q", "z2", "z2"}).code == cli::BadInput);
  CHECK(run({"tilde-product", "--field", "GF:3", "z2", "q8"}).code == cli::BadInput);
}

TEST_CASE("replay") {
  auto one = run({"replay", "example_3_1"});
  CHECK(one.code == cli::Ok);
  CHECK(contains(one.out, "3/3 scenario runs passed"));
  auto js = run({"replay", "prop_6_5", "--json", "--field", "GF:2"});
  REQUIRE(js.code == cli::Ok);
  json doc = json::parse(js.out);
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["passed"] == true);
  CHECK(doc[0]["field"] == "GF(2)");
  CHECK(run({"replay", "unknown"}).code == cli::BadInput);
  CHECK(run({"replay"}).code == cli::BadInput);
}

TEST_CASE("example and usage errors") {
  auto list = run({"example", "--list"});
  CHECK(contains(list.out, "m2_gamma1\n"));
  auto doc = run({"example", "prop_6_5_B", "--field", "GF:3"});
  CHECK(io::parse_algebra(doc.out) == *catalog::klein_four_dim(Field::prime(3)));
  CHECK(run({}).code == cli::BadInput);
  CHECK(run({"frobnicate"}).code == cli::BadInput);
  CHECK(run({"--help"}).code == cli::Ok);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"universal-group", data("m2_gamma2_s3"), "--simplify", "--identify"},
           {"pairs", data("prop_5_2_C")},
           {"tilde-product", "--field", "GF:3", "z2", "z3"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
