#include "gradalg/witnesses.hpp"

#include "gradalg/catalog.hpp"
#include "gradalg/constructions.hpp"
#include "gradalg/error.hpp"
#include "gradalg/free_algebra.hpp"
#include "gradalg/hom_search.hpp"
#include "gradalg/morphism.hpp"
#include "gradalg/presentation.hpp"
#include "gradalg/support_category.hpp"
#include "gradalg/universal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace gradalg::witnesses {

bool ScenarioReport::passed() const {
  return !assertions.empty() &&
         std::all_of(assertions.begin(), assertions.end(), [](const auto& a) { return a.passed; });
}

namespace {

class Checker {
 public:
  explicit Checker(ScenarioReport& report) : report_(report) {}

  void expect(const std::string& description, const std::function<bool()>& predicate) {
    try {
      report_.assertions.push_back({description, predicate(), ""});
    } catch (const std::exception& e) {
      report_.assertions.push_back({description, false, e.what()});
    }
  }

 private:
  ScenarioReport& report_;
};

using catalog::map_by_labels;

AlgebraPtr share(GradedAlgebra a) { return std::make_shared<const GradedAlgebra>(std::move(a)); }

bool unital_graded(const GradedMorphism& f) { return f.is_unital() && f.is_graded(); }

bool unital_graded_injective(const GradedMorphism& f) {
  return unital_graded(f) && is_graded_injective(f);
}

bool distinct_components(const GradedAlgebra& a, const Vector& x, const Vector& y) {
  auto dx = a.homogeneous_degree(x), dy = a.homogeneous_degree(y);
  return !is_zero(x) && !is_zero(y) && dx && dy && *dx != *dy;
}

Vector at(const AlgebraPtr& a, const std::string& label) { return a->basis_vector(a->index_of(label)); }

// Free algebra on x, y in degree 1 of Z, mapped into A and B; the
// one-variable algebra C embeds by x -> x.
void no_products(Field f, Checker& c) {
  auto A = catalog::three_dim_z2(f);
  auto B = catalog::group_algebra_named("z2", f);
  Group z = Group::free_abelian(1);
  const Vector a_g = at(A, "1"), a_t = at(A, "a"), b_h = at(B, "u_1");
  for (bool unital : {false, true}) {
    const std::string mode = unital ? "unital: " : "non-unital: ";
    FreeGradedAlgebra D{z, {"x", "y"}, {z.from_vector({1}), z.from_vector({1})}, unital, std::nullopt};
    FreeMorphism alpha1(D, A, {A->zero(), a_g});
    FreeMorphism alpha2(D, A, {A->zero(), a_t});
    FreeMorphism beta(D, B, {b_h, b_h});
    c.expect(mode + "alpha1, alpha2, beta are well defined and graded on words up to length 4", [&] {
      for (const auto* m : {&alpha1, &alpha2, &beta})
        if (!m->well_defined() || !m->is_graded_up_to(4)) return false;
      return true;
    });
    c.expect(mode + "alpha1(y) and alpha2(y) are nonzero in distinct components of A",
             [&] { return distinct_components(*A, alpha1.evaluate({1}), alpha2.evaluate({1})); });
    c.expect(mode + "beta(x) = beta(y) != 0", [&] {
      return beta.evaluate({0}) == beta.evaluate({1}) && !is_zero(beta.evaluate({0}));
    });
    c.expect(mode + "alpha1 tau = alpha2 tau and beta tau(x^n) != 0 for n <= 4", [&] {
      for (std::size_t n = unital ? 0 : 1; n <= 4; ++n) {
        FreeWord xn(n, 0);
        if (alpha1.evaluate(xn) != alpha2.evaluate(xn) || is_zero(beta.evaluate(xn))) return false;
      }
      return true;
    });
    c.expect(mode + "alpha1 and alpha2 differ on y", [&] { return !(alpha1 == alpha2); });
  }
}

void no_coproduct(Field f, Checker& c) {
  auto A = catalog::c3_six_dim(f);
  auto B = catalog::dual_numbers_trivial(f);
  auto C = catalog::free_group_monomial(f);
  c.expect("A, B and C are graded algebras", [&] {
    return verify_grading(*A).ok && verify_grading(*B).ok && verify_grading(*C).ok;
  });
  c.expect("v -> 0 is a unital graded hom B -> A",
           [&] { return unital_graded(map_by_labels(B, A, {{"1", {{"1", 1}}}})); });
  c.expect("cd = dc != 0 in A", [&] {
    Vector cd = A->multiply(at(A, "c"), at(A, "d"));
    return cd == A->multiply(at(A, "d"), at(A, "c")) && !is_zero(cd);
  });
  c.expect("alpha: a -> x, b -> z, c, d -> 0 is a unital graded hom", [&] {
    return unital_graded(map_by_labels(A, C, {{"1", {{"1", 1}}}, {"a", {{"x", 1}}}, {"b", {{"z", 1}}}}));
  });
  c.expect("beta: v -> y is a unital graded hom",
           [&] { return unital_graded(map_by_labels(B, C, {{"1", {{"1", 1}}}, {"v", {{"y", 1}}}})); });
  c.expect("xyz and zyx are nonzero and lie in different components of C", [&] {
    Vector x = at(C, "x"), y = at(C, "y"), z = at(C, "z");
    return distinct_components(*C, C->multiply(C->multiply(x, y), z), C->multiply(C->multiply(z, y), x));
  });
}

void no_coequalizer(Field f, Checker& c) {
  auto B = catalog::free_group_five_dim(f);
  auto A = catalog::free_group_sub_ab(f);
  auto D = catalog::free_group_sub_a(f);
  c.expect("A, B and D are graded algebras",
           [&] { return verify_grading(*A).ok && verify_grading(*B).ok && verify_grading(*D).ok; });
  auto alpha = map_by_labels(A, B, {{"1", {{"1", 1}}}, {"a", {{"a", 1}}}, {"b", {{"b", 1}}}});
  auto beta = map_by_labels(A, B, {{"1", {{"1", 1}}}, {"a", {{"b", 1}}}, {"b", {{"a", 1}}}});
  auto phi = map_by_labels(
      B, D, {{"1", {{"1", 1}}}, {"a", {{"a", 1}}}, {"b", {{"a", 1}}}, {"c", {{"a", 1}}}, {"d", {{"a", 1}}}});
  auto theta = map_by_labels(B, A, {{"1", {{"1", 1}}}, {"c", {{"a", 1}}}, {"d", {{"b", 1}}}});
  c.expect("alpha, beta, phi, theta are unital graded homs", [&] {
    return unital_graded(alpha) && unital_graded(beta) && unital_graded(phi) && unital_graded(theta);
  });
  c.expect("beta swaps a and b", [&] {
    return beta.apply(at(A, "a")) == at(B, "b") && beta.apply(at(A, "b")) == at(B, "a");
  });
  c.expect("phi alpha = phi beta and phi(a) != 0", [&] {
    return compose(phi, alpha) == compose(phi, beta) && !is_zero(phi.apply(at(B, "a")));
  });
  c.expect("theta alpha = theta beta", [&] { return compose(theta, alpha) == compose(theta, beta); });
  c.expect("theta(c) and theta(d) are nonzero in distinct components of A",
           [&] { return distinct_components(*A, theta.apply(at(B, "c")), theta.apply(at(B, "d"))); });
}

void oplax_strict(Field f, Checker& c) {
  auto A = catalog::three_dim_z2(f);
  auto phi = catalog::shift_endomorphism(A);
  auto phi2 = compose(phi, phi);
  const Group& g = A->group();
  const auto zero = g.element(0), one = g.element(1);
  PairSet all_but_odd{{zero, zero}, {zero, one}, {one, zero}};
  c.expect("A is a graded algebra", [&] { return verify_grading(*A).ok; });
  c.expect("phi is a unital graded hom", [&] { return unital_graded(phi); });
  c.expect("L(A) = (Z/2, Z/2, all pairs but (1,1))", [&] {
    auto t = L_object(*A);
    return t.support == SupportSet{zero, one} && t.pairs == all_but_odd;
  });
  auto l = L_morphism(phi);
  c.expect("L(phi) = (id, Z/2, all pairs but (1,1))", [&] {
    return l.domain == SupportSet{zero, one} && l.pairs == all_but_odd &&
           l.psi == SupportMap{{zero, zero}, {one, one}};
  });
  c.expect("L(phi)^2 = L(phi)", [&] { return triple_compose(l, l) == l; });
  c.expect("L(phi^2) = (id on {0}, {0}, {(0,0)})", [&] {
    auto l2 = L_morphism(phi2);
    return l2.domain == SupportSet{zero} && l2.pairs == PairSet{{zero, zero}} &&
           l2.psi == SupportMap{{zero, zero}};
  });
  c.expect("L(phi^2) < L(phi)^2 strictly, with 1 missing from R", [&] {
    auto l2 = L_morphism(phi2);
    auto ll = triple_compose(l, l);
    auto d = triple_defect(l2, ll);
    return triple_leq(l2, ll) && !(l2 == ll) && d.missing_domain == SupportSet{one};
  });
}

void non_injective_mono(Field f, Checker& c) {
  auto A = catalog::z4_four_dim(f);
  Vector s = A->element({{"a1", 1}, {"a2", 1}, {"a3", 1}});
  auto q = quotient(*A, {s});
  auto B = share(q.algebra);
  auto pi = GradedMorphism::analyze(A, B, q.projection);
  c.expect("a1 + a2 + a3 is not homogeneous", [&] { return !A->homogeneous_degree(s); });
  c.expect("the quotient is trivially graded", [&] { return has_trivial_grading(*B); });
  c.expect("pi is a unital graded hom", [&] { return unital_graded(pi); });
  c.expect("pi passes the monomorphism criterion", [&] { return mono_check(pi).mono; });
  c.expect("dim ker pi = 1", [&] { return pi.kernel().dim() == 1; });
  c.expect("pi is not injective", [&] { return !pi.is_injective(); });
}

void augmentation(Field f, Checker& c) {
  auto FG = catalog::group_algebra_named("z2", f);
  auto F = catalog::ground_field(f);
  auto aug = map_by_labels(FG, F, {{"u_0", {{"u_0", 1}}}, {"u_1", {{"u_0", 1}}}});
  const Vector u0 = at(FG, "u_0"), u1 = at(FG, "u_1");
  c.expect("the augmentation is a unital graded hom", [&] { return unital_graded(aug); });
  c.expect("the augmentation is graded injective", [&] { return is_graded_injective(aug); });
  c.expect("the monomorphism criterion fails with witness (u_0, u_1)", [&] {
    auto r = mono_check(aug);
    if (r.mono || !r.refuting_pair) return false;
    const auto& [a, b] = *r.refuting_pair;
    return (a == u0 && b == u1) || (a == u1 && b == u0);
  });
  for (auto mode : {MonoMode::Ambient, MonoMode::Tilde}) {
    const std::string name = mode == MonoMode::Ambient ? "graded" : "graded injective";
    c.expect("two different " + name + " morphisms lambda, mu with aug lambda = aug mu", [&] {
      auto r = mono_refute(aug, u0, u1, mode, true);
      bool certified = mode == MonoMode::Ambient || r.graded_injective_certified;
      return certified && !(r.lambda == r.mu) && compose(aug, r.lambda) == compose(aug, r.mu);
    });
  }
}

GradedMorphism embedding(const AlgebraPtr& a, const AlgebraPtr& b, const std::vector<std::size_t>& target) {
  Matrix m(a->field(), b->dim(), a->dim());
  for (std::size_t i = 0; i < target.size(); ++i) m.set(target[i], i, Scalar::one(a->field()));
  return GradedMorphism::analyze(a, b, std::move(m));
}

void group_algebra_coproduct(Field f, Checker& c) {
  FiniteGroup z2 = make_cyclic(2);
  Group gh(make_product(z2, z2));
  auto FG = catalog::group_algebra_named("z2", f);
  auto FGH = share(group_algebra(f, gh));
  AlgebraBuilder pb(f, gh);
  for (std::size_t g = 0; g < 2; ++g) pb.add("(u_" + std::to_string(g) + ",0)", gh.element(2 * g));
  for (std::size_t h = 0; h < 2; ++h) pb.add("(0,u_" + std::to_string(h) + ")", gh.element(h));
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) {
      pb.set(x, y, unit_vector(f, 4, x ^ y));
      pb.set(2 + x, 2 + y, unit_vector(f, 4, 2 + (x ^ y)));
    }
  Vector unit = zero_vector(f, 4);
  unit[0] = unit[2] = Scalar::one(f);
  pb.unit_element(unit);
  auto P = share(pb.build());

  auto phi1 = embedding(FG, FGH, {0, 2});  // u_g -> u_(g,0)
  auto phi2 = embedding(FG, FGH, {0, 1});  // u_h -> u_(0,h)
  auto psi1 = embedding(FG, P, {0, 1});
  auto psi2 = embedding(FG, P, {2, 3});
  c.expect("F(G x H) and FG x FH are G x H graded algebras",
           [&] { return verify_grading(*FGH).ok && verify_grading(*P).ok; });
  c.expect("the four embeddings are graded injective", [&] {
    for (const auto* m : {&phi1, &phi2, &psi1, &psi2})
      if (!m->is_graded() || !is_graded_injective(*m)) return false;
    return phi1.is_unital() && phi2.is_unital();
  });
  c.expect("u_(g,0) u_(0,h) != 0 in F(G x H) for all g, h", [&] {
    for (std::size_t g = 0; g < 2; ++g)
      for (std::size_t h = 0; h < 2; ++h)
        if (is_zero(FGH->multiply(phi1.apply(FG->basis_vector(g)), phi2.apply(FG->basis_vector(h)))))
          return false;
    return true;
  });
  c.expect("(u_g,0)(0,u_h) = 0 in FG x FH for all g, h", [&] {
    for (std::size_t g = 0; g < 2; ++g)
      for (std::size_t h = 0; h < 2; ++h)
        if (!is_zero(P->multiply(psi1.apply(FG->basis_vector(g)), psi2.apply(FG->basis_vector(h)))))
          return false;
    return true;
  });
}

void tilde_coproduct(Field f, Checker& c) {
  auto A1 = catalog::dual_numbers_z2(f, "a1");
  auto A2 = catalog::dual_numbers_z2(f, "a2");
  auto A0 = catalog::z3_three_dim(f);
  auto B = catalog::klein_four_dim(f);
  c.expect("A1, A2, A0 and B are graded algebras", [&] {
    for (const auto& x : {A1, A2, A0, B})
      if (!verify_grading(*x).ok) return false;
    return true;
  });
  c.expect("phi_j: A_j -> A0 and psi_j: A_j -> B are unital graded injective", [&] {
    return unital_graded_injective(map_by_labels(A1, A0, {{"1", {{"1", 1}}}, {"a1", {{"a1", 1}}}})) &&
           unital_graded_injective(map_by_labels(A2, A0, {{"1", {{"1", 1}}}, {"a2", {{"a2", 1}}}})) &&
           unital_graded_injective(map_by_labels(A1, B, {{"1", {{"1", 1}}}, {"a1", {{"b1", 1}}}})) &&
           unital_graded_injective(map_by_labels(A2, B, {{"1", {{"1", 1}}}, {"a2", {{"b2", 1}}}}));
  });
  c.expect("a1 a2 = a2 a1 = 0 in A0", [&] {
    return is_zero(A0->multiply(at(A0, "a1"), at(A0, "a2"))) &&
           is_zero(A0->multiply(at(A0, "a2"), at(A0, "a1")));
  });
  c.expect("b1 b2 != 0 in B", [&] { return !is_zero(B->multiply(at(B, "b1"), at(B, "b2"))); });
}

void trivial_target(Field f, Checker& c) {
  auto A = catalog::dual_numbers_z2(f, "a");
  auto B = share(trivial_grading(*catalog::three_dim_z2(f)));
  auto first = map_by_labels(A, B, {{"1", {{"1", 1}}}, {"a", {{"a", 1}}}});
  auto second = map_by_labels(A, B, {{"1", {{"1", 1}}}, {"a", {{"b", 1}}}});
  c.expect("B is trivially graded", [&] { return has_trivial_grading(*B); });
  c.expect("two different unital graded injective maps A -> B", [&] {
    return unital_graded_injective(first) && unital_graded_injective(second) && !(first == second);
  });
  std::vector<AlgebraPtr> targets{B, share(trivial_grading(*catalog::z3_three_dim(f))),
                                  share(trivial_grading(*catalog::group_algebra_named("z3", f)))};
  c.expect("every sampled graded injective h out of B is injective and separates the two maps", [&] {
    std::size_t found = 0;
    for (const auto& t : targets) {
      HomSearchOptions opt;
      opt.unital = true;
      opt.blocks = HomSearchOptions::Blocks::Injective;
      opt.node_budget = 200000;
      for (const auto& h : enumerate_graded_homs(B, t, opt).homs) {
        ++found;
        if (!h.is_injective() || compose(h, first) == compose(h, second)) return false;
      }
    }
    return found > 0;
  });
}

void direct_sum_copies(Field f, Checker& c) {
  auto A = catalog::three_dim_z2(f);
  auto S = share(direct_sum({*A, *A, *A}));
  c.expect("the sum of three copies has the support and pair set of A",
           [&] { return S->support() == A->support() && S->pair_set() == A->pair_set(); });
  c.expect("the universal group presentations agree", [&] {
    return universal_group(*S).presentation == universal_group(*A).presentation;
  });
  c.expect("the three inclusions are pairwise different graded injective maps", [&] {
    std::vector<GradedMorphism> inc;
    for (std::size_t k = 0; k < 3; ++k)
      inc.push_back(embedding(A, S, {3 * k, 3 * k + 1, 3 * k + 2}));
    for (std::size_t i = 0; i < 3; ++i) {
      if (!inc[i].is_graded() || !is_graded_injective(inc[i])) return false;
      for (std::size_t j = 0; j < i; ++j)
        if (inc[i] == inc[j]) return false;
    }
    return true;
  });
}

void unit_embedding(Field f, Checker& c) {
  auto FG = catalog::group_algebra_named("z2", f);
  auto F = catalog::ground_field(f);
  auto Xi = share(trivial_grading(*FG));
  auto aug = map_by_labels(FG, F, {{"u_0", {{"u_0", 1}}}, {"u_1", {{"u_0", 1}}}});
  auto unit_map = map_by_labels(F, Xi, {{"u_0", {{"u_0", 1}}}});
  auto id = GradedMorphism::analyze(FG, Xi, Matrix::identity(f, 2));
  auto through_f = compose(unit_map, aug);
  c.expect("the augmentation has a nonzero kernel", [&] { return aug.kernel().dim() == 1; });
  c.expect("identity and unit embedding after augmentation are unital graded injective",
           [&] { return unital_graded_injective(id) && unital_graded_injective(through_f); });
  c.expect("the two morphisms differ", [&] { return !(id == through_f); });
  c.expect("the trivial grading has trivial universal group",
           [&] { return identify(universal_group(*Xi).presentation).kind == Identification::Kind::Trivial; });
  c.expect("both morphisms induce the same map of universal groups",
           [&] { return R_on_morphism(id) == R_on_morphism(through_f); });
}

struct Entry {
  std::string summary;
  std::function<void(Field, Checker&)> body;
};

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> r = {
      {"aug_counterexample", {"augmentation FZ/2 -> F is graded injective but not a monomorphism", augmentation}},
      {"example_3_1", {"L(phi^2) is strictly below L(phi)^2", oplax_strict}},
      {"example_5_7", {"a non-injective monomorphism onto a trivially graded quotient", non_injective_mono}},
      {"prop_5_2", {"ingredients of a missing coproduct over C_3 and a free group", no_coproduct}},
      {"prop_5_4", {"ingredients of a missing coequalizer over a free group", no_coequalizer}},
      {"prop_6_4", {"F(G x H) against the componentwise product FG x FH", group_algebra_coproduct}},
      {"prop_6_5", {"ingredients of a missing coproduct of two dual-number algebras", tilde_coproduct}},
      {"prop_6_6", {"graded injective maps out of a trivially graded algebra separate morphisms", trivial_target}},
      {"prop_7_direct_sum", {"copies of an algebra share its universal group", direct_sum_copies}},
      {"prop_7_unit_embedding", {"identity versus unit embedding after augmentation", unit_embedding}},
      {"thm_5_1", {"ingredients of a missing product of graded algebras", no_products}},
  };
  return r;
}

}  // namespace

const std::vector<ScenarioInfo>& scenarios() {
  static const std::vector<ScenarioInfo> list = [] {
    std::vector<ScenarioInfo> out;
    for (const auto& [name, e] : registry()) out.push_back({name, e.summary});
    return out;
  }();
  return list;
}

ScenarioReport run(const std::string& name, Field field) {
  auto it = registry().find(name);
  if (it == registry().end()) throw InputError("unknown scenario: " + name);
  ScenarioReport report{name, field, {}};
  Checker c(report);
  try {
    it->second.body(field, c);
  } catch (const std::exception& e) {
    report.assertions.push_back({"construction", false, e.what()});
  }
  return report;
}

std::vector<ScenarioReport> run_all(const std::vector<Field>& fields) {
  std::vector<ScenarioReport> out;
  for (const auto& s : scenarios())
    for (const auto& f : fields) out.push_back(run(s.name, f));
  return out;
}

std::vector<Field> default_fields() { return {Field::rationals(), Field::prime(2), Field::prime(3)}; }

std::string render(const ScenarioReport& report) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& a : report.assertions) passed += a.passed;
  out << report.name << " over " << report.field.name() << ": " << (report.passed() ? "PASS" : "FAIL")
      << " (" << passed << "/" << report.assertions.size() << ")\n";
  for (const auto& a : report.assertions) {
    out << "  [" << (a.passed ? "pass" : "FAIL") << "] " << a.description;
    if (!a.detail.empty()) out << ": " << a.detail;
    out << "\n";
  }
  return out.str();
}

}  // namespace gradalg::witnesses
