#include "doctest.h"
#include "gradalg/error.hpp"
#include "gradalg/witnesses.hpp"

#include <algorithm>

using namespace gradalg;

TEST_CASE("registered scenarios") {
  const auto& s = witnesses::scenarios();
  std::vector<std::string> names;
  for (const auto& x : s) names.push_back(x.name);
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(names == std::vector<std::string>{"aug_counterexample", "example_3_1", "example_5_7", "prop_5_2", "prop_5_4",
                                          "prop_6_4", "prop_6_5", "prop_6_6", "prop_7_direct_sum",
                                          "prop_7_unit_embedding", "thm_5_1"});
  for (const auto& x : s) CHECK_FALSE(x.summary.empty());
}

TEST_CASE("every scenario passes over every default field") {
  for (const auto& s : witnesses::scenarios())
    for (Field f : witnesses::default_fields()) {
      auto r = witnesses::run(s.name, f);
      CHECK_MESSAGE(r.passed(), witnesses::render(r));
      CHECK(r.assertions.size() >= 2);
    }
}

TEST_CASE("reports") {
  CHECK_THROWS_AS(witnesses::run("unknown", Field::rationals()), InputError);
  auto r = witnesses::run("example_5_7", Field::prime(3));
  auto text = witnesses::render(r);
  CHECK(text.rfind("example_5_7 over GF(3): PASS", 0) == 0);
  auto all = witnesses::run_all({Field::prime(2)});
  CHECK(all.size() == witnesses::scenarios().size());
  CHECK(all.front().name == "aug_counterexample");
}
