#include "gradalg/cli.hpp"

#include "gradalg/catalog.hpp"
#include "gradalg/equivalence.hpp"
#include "gradalg/group_algebra.hpp"
#include "gradalg/io.hpp"
#include "gradalg/presentation.hpp"
#include "gradalg/regrading.hpp"
#include "gradalg/support_category.hpp"
#include "gradalg/universal.hpp"
#include "gradalg/witnesses.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace gradalg::cli {

namespace fs = std::filesystem;
using io::json;

Field parse_field_spec(const std::string& text) {
  if (text == "Q") return Field::rationals();
  std::string digits;
  if (text.rfind("GF:", 0) == 0) digits = text.substr(3);
  else if (text.rfind("GF(", 0) == 0 && text.back() == ')') digits = text.substr(3, text.size() - 4);
  else throw InputError("field must be Q, GF:p or GF(p), got '" + text + "'");
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("field must be Q, GF:p or GF(p), got '" + text + "'");
  return Field::prime(std::stoull(digits));
}

namespace {

AlgebraPtr load_algebra(const std::string& path, bool validate = true) {
  return std::make_shared<const GradedAlgebra>(io::algebra_from_json(io::read_json_file(path), validate));
}

// A hom document whose missing domain/codomain default to the given files.
GradedMorphism load_hom(const std::string& path, const std::string& domain = {},
                        const std::string& codomain = {}) {
  json j = io::read_json_file(path);
  const fs::path base = fs::path(path).parent_path();
  if (!j.contains("domain") && !domain.empty()) j["domain"] = fs::absolute(domain).string();
  if (!j.contains("codomain") && !codomain.empty()) j["codomain"] = fs::absolute(codomain).string();
  return io::hom_from_json(j, base);
}

FiniteGroup named_group(const std::string& spec) {
  if (fs::exists(spec)) {
    Group g = io::group_from_json(io::read_json_file(spec));
    if (!g.is_finite()) throw InputError("expected a finite group in " + spec);
    return g.table();
  }
  if (spec == "z2xz2") return make_product(make_cyclic(2), make_cyclic(2));
  if (spec.size() > 1 && (spec[0] == 'z' || spec[0] == 's' || spec[0] == 'd') &&
      spec.find_first_not_of("0123456789", 1) == std::string::npos) {
    const std::size_t n = std::stoul(spec.substr(1));
    if (spec[0] == 'z' && n > 0) return make_cyclic(n);
    if (spec[0] == 's') return make_symmetric(n);
    if (spec[0] == 'd' && n > 0) return make_dihedral(n);
  }
  throw InputError("unknown group '" + spec + "' (use zN, sN, dN, z2xz2 or a group document)");
}

std::string format_map(const Group& g, const Group& h, const SupportMap& psi) {
  std::string out;
  for (const auto& [a, b] : psi) out += "  " + g.format(a) + " -> " + h.format(b) + "\n";
  return out;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(io::scalar_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json report_json(const witnesses::ScenarioReport& r) {
  json as = json::array();
  for (const auto& a : r.assertions)
    as.push_back({{"description", a.description}, {"passed", a.passed}, {"detail", a.detail}});
  return {{"name", r.name}, {"field", r.field.name()}, {"passed", r.passed()}, {"assertions", as}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with group-graded algebras", "gradalg"};
  app.require_subcommand(1);
  int code = Ok;

  std::string file, file2, hom1, hom2, hom_path, field_spec = "Q", name;
  bool simplify = false, identify_flag = false, all = false, as_json = false, list = false;
  std::size_t max_cosets = 10000;
  std::vector<std::string> groups;

  auto* check = app.add_subcommand("check", "Verify the grading of an algebra document");
  check->add_option("FILE", file)->required();
  check->callback([&] {
    auto a = load_algebra(file, false);
    auto r = verify_grading(*a);
    if (r.ok) {
      out << "ok: graded algebra of dimension " << a->dim() << " over " << a->field().name() << "\n";
    } else {
      out << "grading violation: " << r.message << "\n";
      code = PropertyFalse;
    }
  });

  auto* support = app.add_subcommand("support", "List the support");
  support->add_option("FILE", file)->required();
  support->callback([&] {
    auto a = load_algebra(file);
    out << format_support(a->group(), a->support()) << "\n";
  });

  auto* pairs = app.add_subcommand("pairs", "List the pairs (g, h) with A^g A^h != 0");
  pairs->add_option("FILE", file)->required();
  pairs->callback([&] {
    auto a = load_algebra(file);
    out << format_pairs(a->group(), a->pair_set()) << "\n";
  });

  auto* ug = app.add_subcommand("universal-group", "Presentation of the universal grading group");
  ug->add_option("FILE", file)->required();
  ug->add_flag("--simplify", simplify, "Also print the Tietze-simplified presentation");
  ug->add_flag("--identify", identify_flag, "Identify the group (trivial, free, finite)");
  ug->add_option("--max-cosets", max_cosets, "Coset budget for --identify");
  ug->callback([&] {
    auto a = load_algebra(file);
    auto u = universal_group(*a);
    out << "presentation: " << u.presentation.to_string() << "\n";
    out << "generators: " << u.presentation.generator_count() << ", relators: "
        << u.presentation.relators().size() << "\n";
    if (simplify) out << "simplified: " << tietze_simplify(u.presentation).presentation.to_string() << "\n";
    if (identify_flag) {
      auto id = identify(u.presentation, max_cosets);
      out << "identified: " << id.verdict() << "\n";
      if (id.kind == Identification::Kind::Unknown) code = OutOfBudget;
    }
  });

  auto* weq = app.add_subcommand("weak-equiv", "Verify or search for a weak equivalence");
  weq->add_option("FILE1", file)->required();
  weq->add_option("FILE2", file2)->required();
  weq->add_option("--certificate", hom_path, "Hom document to verify");
  weq->callback([&] {
    if (!hom_path.empty()) {
      auto phi = load_hom(hom_path, file, file2);
      auto r = check_weak_equivalence(phi);
      if (r.ok) {
        out << "certificate\n" << format_map(phi.domain()->group(), phi.codomain()->group(), r.psi);
      } else {
        out << "not a weak equivalence: " << r.reason << "\n";
        code = PropertyFalse;
      }
      return;
    }
    auto a = load_algebra(file), b = load_algebra(file2);
    auto r = search_weak_equivalence(a, b);
    switch (r.status) {
      case WeakEquivalenceSearch::Status::Certificate:
        out << "certificate\n" << format_map(a->group(), b->group(), r.psi);
        out << io::hom_to_json(*r.certificate)["matrix"].dump() << "\n";
        break;
      case WeakEquivalenceSearch::Status::None:
        out << "none: " << r.reason << "\n";
        code = PropertyFalse;
        break;
      case WeakEquivalenceSearch::Status::Unknown:
        out << "unknown: " << r.reason << "\n";
        code = OutOfBudget;
        break;
    }
  });

  auto* eq = app.add_subcommand("equalizer", "Equalizer of two morphisms A -> B");
  eq->add_option("FILE", file, "The algebra A")->required();
  eq->add_option("HOM1", hom1, "Hom document; domain defaults to A, codomain to A")->required();
  eq->add_option("HOM2", hom2, "Hom document with the same defaults")->required();
  eq->callback([&] {
    auto alpha = load_hom(hom1, file, file), beta = load_hom(hom2, file, file);
    Equalizer e(alpha, beta);
    json doc = {{"algebra", io::algebra_to_json(*e.algebra())},
                {"inclusion", matrix_json(e.inclusion().matrix())}};
    out << doc.dump(2) << "\n";
  });

  auto* mono = app.add_subcommand("mono", "Monomorphism criterion for a morphism");
  mono->add_option("HOMFILE", hom_path)->required();
  mono->callback([&] {
    auto f = load_hom(hom_path);
    if (!f.is_graded()) throw InputError("morphism is not graded");
    auto r = mono_check(f);
    if (r.mono) {
      out << "monomorphism\n";
    } else {
      const auto& [a, b] = *r.refuting_pair;
      out << "not a monomorphism: f(" << f.domain()->format(a) << ") = f(" << f.domain()->format(b) << ")\n";
      code = PropertyFalse;
    }
  });

  auto* gi = app.add_subcommand("graded-injective", "Injectivity on every homogeneous component");
  gi->add_option("HOMFILE", hom_path)->required();
  gi->callback([&] {
    auto f = load_hom(hom_path);
    if (!f.is_graded()) throw InputError("morphism is not graded");
    auto r = graded_injectivity(f);
    if (r.ok) {
      out << "graded injective\n";
    } else {
      out << "not graded injective: f(" << f.domain()->format(*r.witness) << ") = 0 in degree "
          << f.domain()->group().format(*r.degree) << "\n";
      code = PropertyFalse;
    }
  });

  auto* regrade = app.add_subcommand("regrade", "Push the grading forward along a group hom");
  regrade->add_option("FILE", file)->required();
  regrade->add_option("--hom", hom_path, "Group hom document")->required();
  regrade->callback([&] {
    auto a = load_algebra(file);
    out << io::render_algebra(U_phi(*a, io::group_hom_from_json(io::read_json_file(hom_path))));
  });

  auto* pullback = app.add_subcommand("pullback", "Pull the grading back along a group hom");
  pullback->add_option("FILE", file)->required();
  pullback->add_option("--hom", hom_path, "Group hom document")->required();
  pullback->callback([&] {
    auto b = load_algebra(file);
    auto k = K_phi(b, io::group_hom_from_json(io::read_json_file(hom_path)));
    out << io::render_algebra(*k.algebra);
  });

  auto* tilde = app.add_subcommand("tilde-product", "Product of two group algebras among graded injective maps");
  tilde->add_option("--field", field_spec, "GF:p")->required();
  tilde->add_option("GROUPS", groups, "Two groups: zN, sN, dN, z2xz2 or group documents")->expected(2)->required();
  tilde->callback([&] {
    auto p = tilde_product(parse_field_spec(field_spec), named_group(groups[0]), named_group(groups[1]));
    json doc = {{"algebra", io::algebra_to_json(*p.algebra)},
                {"pi1", matrix_json(p.pi1.matrix())},
                {"pi2", matrix_json(p.pi2.matrix())},
                {"unit_generator", io::scalar_to_json(p.generator)}};
    out << doc.dump(2) << "\n";
  });

  auto* replay = app.add_subcommand("replay", "Run witness scenarios");
  replay->add_option("NAME", name);
  replay->add_flag("--all", all, "Run every scenario");
  replay->add_flag("--json", as_json, "Machine-readable output");
  replay->add_option("--field", field_spec, "Restrict to one field (default: Q, GF:2, GF:3)");
  replay->callback([&] {
    if (name.empty() && !all) throw InputError("replay needs a scenario name or --all");
    std::vector<Field> fields = replay->count("--field") ? std::vector<Field>{parse_field_spec(field_spec)}
                                                         : witnesses::default_fields();
    std::vector<witnesses::ScenarioReport> reports;
    if (all) reports = witnesses::run_all(fields);
    else
      for (const auto& f : fields) reports.push_back(witnesses::run(name, f));
    std::size_t passed = 0;
    json arr = json::array();
    for (const auto& r : reports) {
      passed += r.passed();
      if (as_json) arr.push_back(report_json(r));
      else out << witnesses::render(r);
    }
    if (as_json) out << arr.dump(2) << "\n";
    else out << passed << "/" << reports.size() << " scenario runs passed\n";
    if (passed != reports.size()) code = PropertyFalse;
  });

  auto* example = app.add_subcommand("example", "Print a bundled example algebra document");
  example->add_option("NAME", name);
  example->add_flag("--list", list, "List example names");
  example->add_option("--field", field_spec, "Q or GF:p");
  example->callback([&] {
    if (list || name.empty()) {
      for (const auto& n : catalog::names()) out << n << "\n";
      return;
    }
    out << io::render_algebra(*catalog::algebra(name, parse_field_spec(field_spec)));
  });

  std::vector<const char*> argv{"gradalg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? Ok : BadInput;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return OutOfBudget;
  } catch (const NotAHomError& e) {
    err << "error: " << e.what() << "\n";
    return BadInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return BadInput;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return BadInput;
  }
  return code;
}

}  // namespace gradalg::cli
