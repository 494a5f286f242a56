#include "gradalg/catalog.hpp"

#include "gradalg/constructions.hpp"
#include "gradalg/error.hpp"

#include <functional>
#include <map>

namespace gradalg::catalog {

namespace {

AlgebraPtr share(GradedAlgebra a) { return std::make_shared<const GradedAlgebra>(std::move(a)); }

GroupElement labelled(const Group& g, const std::string& label) {
  auto idx = g.table().find(label);
  if (!idx) throw InputError("no group element labelled " + label);
  return g.element(*idx);
}

}  // namespace

GradedMorphism map_by_labels(const AlgebraPtr& a, const AlgebraPtr& b,
                             const std::vector<std::pair<std::string, Terms>>& images) {
  std::vector<Vector> cols(a->dim(), b->zero());
  for (const auto& [label, terms] : images) cols[a->index_of(label)] = b->element(terms);
  return GradedMorphism::analyze(a, b, Matrix::from_columns(a->field(), b->dim(), cols));
}

AlgebraPtr m2_gamma1(Field f) {
  Group z = Group::free_abelian(1);
  return share(matrix_algebra_elementary(f, z, {z.from_vector({1}), z.identity()}));
}

AlgebraPtr m2_gamma2_s3(Field f) {
  Group s3(make_symmetric(3));
  return share(matrix_algebra_elementary(f, s3, {labelled(s3, "(132)"), s3.identity()}));
}

AlgebraPtr three_dim_z2(Field f) {
  Group z2(make_cyclic(2));
  AlgebraBuilder b(f, z2);
  b.add("1", z2.element(0));
  b.add("a", z2.element(1));
  b.add("b", z2.element(1));
  b.unit("1");
  return share(b.build());
}

GradedMorphism shift_endomorphism(const AlgebraPtr& a) {
  return map_by_labels(a, a, {{"1", {{"1", 1}}}, {"a", {{"b", 1}}}});
}

AlgebraPtr c3_six_dim(Field f) {
  Group c3(make_cyclic(3));
  AlgebraBuilder b(f, c3);
  b.add("1", c3.element(0));
  b.add("a", c3.element(1));
  b.add("b", c3.element(2));
  b.add("c", c3.element(1));
  b.add("d", c3.element(2));
  b.add("cd", c3.element(0));
  b.unit("1");
  b.set("c", "d", {{"cd", 1}});
  b.set("d", "c", {{"cd", 1}});
  return share(b.build());
}

AlgebraPtr dual_numbers_trivial(Field f) {
  AlgebraBuilder b(f, Group::trivial());
  const auto e = Group::trivial().identity();
  b.add("1", e);
  b.add("v", e);
  b.unit("1");
  return share(b.build());
}

AlgebraPtr free_group_monomial(Field f) {
  Group g = Group::free(2, {"X", "Z"});
  const auto X = g.element(0), Z = g.element(1), e = g.identity();
  AlgebraBuilder b(f, g);
  b.add("1", e);
  b.add("x", X);
  b.add("y", e);
  b.add("z", Z);
  b.add("xy", X);
  b.add("yz", Z);
  b.add("zy", Z);
  b.add("yx", X);
  b.add("xyz", g.multiply(X, Z));
  b.add("zyx", g.multiply(Z, X));
  b.unit("1");
  b.set("x", "y", {{"xy", 1}});
  b.set("y", "z", {{"yz", 1}});
  b.set("z", "y", {{"zy", 1}});
  b.set("y", "x", {{"yx", 1}});
  b.set("xy", "z", {{"xyz", 1}});
  b.set("x", "yz", {{"xyz", 1}});
  b.set("zy", "x", {{"zyx", 1}});
  b.set("z", "yx", {{"zyx", 1}});
  return share(b.build());
}

namespace {

AlgebraPtr free_group_zero_products(Field f, const std::vector<std::pair<std::string, int>>& nilpotents) {
  Group g = Group::free(2, {"x", "y"});
  AlgebraBuilder b(f, g);
  b.add("1", g.identity());
  for (const auto& [label, gen] : nilpotents) b.add(label, g.element(gen));
  b.unit("1");
  return share(b.build());
}

}  // namespace

AlgebraPtr free_group_five_dim(Field f) {
  return free_group_zero_products(f, {{"a", 0}, {"b", 1}, {"c", 0}, {"d", 1}});
}

AlgebraPtr free_group_sub_ab(Field f) { return free_group_zero_products(f, {{"a", 0}, {"b", 1}}); }

AlgebraPtr free_group_sub_a(Field f) { return free_group_zero_products(f, {{"a", 0}}); }

AlgebraPtr z4_four_dim(Field f) {
  Group z4(make_cyclic(4));
  AlgebraBuilder b(f, z4);
  b.add("1", z4.element(0));
  for (int i = 1; i <= 3; ++i) b.add("a" + std::to_string(i), z4.element(i));
  b.unit("1");
  return share(b.build());
}

AlgebraPtr dual_numbers_z2(Field f, const std::string& name) {
  Group z2(make_cyclic(2));
  AlgebraBuilder b(f, z2);
  b.add("1", z2.element(0));
  b.add(name, z2.element(1));
  b.unit("1");
  return share(b.build());
}

AlgebraPtr z3_three_dim(Field f) {
  Group z3(make_cyclic(3));
  AlgebraBuilder b(f, z3);
  b.add("1", z3.element(0));
  b.add("a1", z3.element(1));
  b.add("a2", z3.element(2));
  b.unit("1");
  return share(b.build());
}

AlgebraPtr klein_four_dim(Field f) {
  Group v(make_product(make_cyclic(2), make_cyclic(2)));
  AlgebraBuilder b(f, v);
  b.add("1", labelled(v, "(0,0)"));
  b.add("b1", labelled(v, "(1,0)"));
  b.add("b2", labelled(v, "(0,1)"));
  b.add("b1b2", labelled(v, "(1,1)"));
  b.unit("1");
  b.set("b1", "b2", {{"b1b2", 1}});
  return share(b.build());
}

AlgebraPtr group_algebra_named(const std::string& group, Field f) {
  if (group == "z2") return share(group_algebra(f, make_cyclic(2)));
  if (group == "z3") return share(group_algebra(f, make_cyclic(3)));
  if (group == "z4") return share(group_algebra(f, make_cyclic(4)));
  if (group == "z2xz2") return share(group_algebra(f, make_product(make_cyclic(2), make_cyclic(2))));
  if (group == "s3") return share(group_algebra(f, make_symmetric(3)));
  throw InputError("unknown group name: " + group);
}

AlgebraPtr ground_field(Field f) { return share(group_algebra(f, make_cyclic(1))); }

namespace {

const std::map<std::string, std::function<AlgebraPtr(Field)>>& registry() {
  static const std::map<std::string, std::function<AlgebraPtr(Field)>> r = {
      {"m2_gamma1", m2_gamma1},
      {"m2_gamma2_s3", m2_gamma2_s3},
      {"example_3_1", three_dim_z2},
      {"prop_5_2_A", c3_six_dim},
      {"prop_5_2_B", dual_numbers_trivial},
      {"prop_5_2_C", free_group_monomial},
      {"prop_5_4_B", free_group_five_dim},
      {"prop_5_4_A", free_group_sub_ab},
      {"prop_5_4_D", free_group_sub_a},
      {"example_5_7_A", z4_four_dim},
      {"prop_6_5_A1", [](Field f) { return dual_numbers_z2(f, "a1"); }},
      {"prop_6_5_A2", [](Field f) { return dual_numbers_z2(f, "a2"); }},
      {"prop_6_5_A0", z3_three_dim},
      {"prop_6_5_B", klein_four_dim},
      {"group_algebra_z2", [](Field f) { return group_algebra_named("z2", f); }},
      {"group_algebra_z3", [](Field f) { return group_algebra_named("z3", f); }},
      {"group_algebra_z4", [](Field f) { return group_algebra_named("z4", f); }},
      {"group_algebra_z2xz2", [](Field f) { return group_algebra_named("z2xz2", f); }},
      {"group_algebra_s3", [](Field f) { return group_algebra_named("s3", f); }},
      {"ground_field", ground_field},
  };
  return r;
}

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

AlgebraPtr algebra(const std::string& name, Field f) {
  auto it = registry().find(name);
  if (it == registry().end()) throw InputError("unknown example: " + name);
  return it->second(f);
}

}  // namespace gradalg::catalog
