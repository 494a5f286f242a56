#include "gradalg/io.hpp"

#include <fstream>
#include <sstream>

namespace gradalg::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing \"" + key + "\"");
  return *it;
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::size_t as_count(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

// Wraps library InputErrors raised while interpreting a value at `path`.
template <class F>
auto located(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

Group group_at(const json& j, const std::string& path) {
  const std::string kind = located(join(path, "kind"), [&] {
    const json& k = member(j, "kind", path);
    if (!k.is_string()) fail(join(path, "kind"), "expected a string");
    return k.get<std::string>();
  });
  if (kind == "cyclic") {
    auto n = as_count(member(j, "n", path), join(path, "n"));
    if (n == 0) fail(join(path, "n"), "cyclic group order must be positive");
    return Group(make_cyclic(n));
  }
  if (kind == "symmetric") {
    auto n = as_count(member(j, "n", path), join(path, "n"));
    return located(join(path, "n"), [&] { return Group(make_symmetric(n)); });
  }
  if (kind == "product") {
    const auto& factors = as_array(member(j, "factors", path), join(path, "factors"));
    if (factors.empty()) fail(join(path, "factors"), "product of no groups");
    std::optional<FiniteGroup> acc;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const std::string p = index_path(join(path, "factors"), i);
      Group g = group_at(factors[i], p);
      if (!g.is_finite()) fail(p, "product factors must be finite");
      acc = acc ? make_product(*acc, g.table()) : g.table();
    }
    return Group(*acc);
  }
  if (kind == "cayley") {
    const std::string tp = join(path, "table");
    const auto& rows = as_array(member(j, "table", path), tp);
    const std::size_t n = rows.size();
    std::vector<std::size_t> table;
    for (std::size_t r = 0; r < n; ++r) {
      const auto& row = as_array(rows[r], index_path(tp, r));
      if (row.size() != n) fail(index_path(tp, r), "table must be square");
      for (std::size_t c = 0; c < n; ++c) table.push_back(as_count(row[c], index_path(index_path(tp, r), c)));
    }
    std::size_t identity = 0;
    if (j.contains("identity")) identity = as_count(j["identity"], join(path, "identity"));
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = located(join(path, "labels"), [&] {
      return j["labels"].get<std::vector<std::string>>();
    });
    return located(path, [&] { return Group(FiniteGroup(n, std::move(table), identity, std::move(labels))); });
  }
  if (kind == "free_abelian") return Group::free_abelian(as_count(member(j, "rank", path), join(path, "rank")));
  if (kind == "free") {
    auto rank = as_count(member(j, "rank", path), join(path, "rank"));
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = located(join(path, "labels"), [&] {
      return j["labels"].get<std::vector<std::string>>();
    });
    return located(path, [&] { return Group::free(rank, std::move(labels)); });
  }
  fail(join(path, "kind"), "unknown group kind \"" + kind + "\"");
}

GroupElement element_at(const Group& g, const json& j, const std::string& path) {
  return located(path, [&]() -> GroupElement {
    switch (g.kind()) {
      case Group::Kind::Finite:
        if (j.is_number_integer()) {
          auto i = as_count(j, path);
          if (i >= g.table().order()) fail(path, "element index out of range");
          return g.element(i);
        }
        if (j.is_string()) return g.parse(j.get<std::string>());
        fail(path, "expected an element index or label");
      case Group::Kind::FreeAbelian:
        if (j.is_number_integer() && g.rank() == 1) return g.from_vector({j.get<long>()});
        if (j.is_array()) return g.from_vector(j.get<std::vector<long>>());
        if (j.is_string()) return g.parse(j.get<std::string>());
        fail(path, "expected an integer vector");
      case Group::Kind::Free:
        if (j.is_string()) return g.parse(j.get<std::string>());
        fail(path, "expected a word string");
    }
    fail(path, "unreachable");
  });
}

Scalar scalar_at(Field f, const json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long>());
  if (j.is_string()) return located(path, [&] { return Scalar::parse(f, j.get<std::string>()); });
  fail(path, "expected an integer or a \"num/den\" string");
}

// Sparse [[k, c], ...] or dense [c, ...].
Vector vector_at(Field f, std::size_t dim, const json& j, const std::string& path) {
  const auto& arr = as_array(j, path);
  Vector v = zero_vector(f, dim);
  if (!arr.empty() && arr[0].is_array()) {
    for (std::size_t t = 0; t < arr.size(); ++t) {
      const std::string p = index_path(path, t);
      const auto& term = as_array(arr[t], p);
      if (term.size() != 2) fail(p, "expected [index, coefficient]");
      auto k = as_count(term[0], index_path(p, 0));
      if (k >= dim) fail(index_path(p, 0), "basis index out of range");
      v[k] = v[k] + scalar_at(f, term[1], index_path(p, 1));
    }
    return v;
  }
  if (arr.size() != dim) fail(path, "dense vector has the wrong length");
  for (std::size_t k = 0; k < dim; ++k) v[k] = scalar_at(f, arr[k], index_path(path, k));
  return v;
}

json sparse(const Vector& v) {
  json out = json::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.push_back(json::array({k, scalar_to_json(v[k])}));
  return out;
}

bool same_labels(const FiniteGroup& a, const FiniteGroup& b) { return a == b && a.labels() == b.labels(); }

GradedAlgebra algebra_at(const json& j, const std::string& path, bool validate) {
  const Field f = located(join(path, "field"), [&] { return field_from_json(member(j, "field", path)); });
  const Group g = group_at(member(j, "group", path), join(path, "group"));
  const std::string bp = join(path, "basis");
  const auto& basis = as_array(member(j, "basis", path), bp);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) fail(index_path(bp, i), "expected a label string");
    labels.push_back(basis[i].get<std::string>());
  }
  const std::size_t n = labels.size();
  const std::string dp = join(path, "degrees");
  const auto& degs = as_array(member(j, "degrees", path), dp);
  if (degs.size() != n) fail(dp, "expected one degree per basis vector");
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < n; ++i) degrees.push_back(element_at(g, degs[i], index_path(dp, i)));

  std::vector<Vector> products(n * n, zero_vector(f, n));
  if (j.contains("products")) {
    const std::string pp = join(path, "products");
    const auto& prods = as_array(j["products"], pp);
    for (std::size_t t = 0; t < prods.size(); ++t) {
      const std::string p = index_path(pp, t);
      const auto& entry = as_array(prods[t], p);
      if (entry.size() != 3) fail(p, "expected [i, j, terms]");
      auto i = as_count(entry[0], index_path(p, 0));
      auto k = as_count(entry[1], index_path(p, 1));
      if (i >= n) fail(index_path(p, 0), "basis index out of range");
      if (k >= n) fail(index_path(p, 1), "basis index out of range");
      Vector v = vector_at(f, n, entry[2], index_path(p, 2));
      for (std::size_t c = 0; c < n; ++c) products[i * n + k][c] = products[i * n + k][c] + v[c];
    }
  }
  std::optional<Vector> unit;
  if (j.contains("unit") && !j["unit"].is_null()) unit = vector_at(f, n, j["unit"], join(path, "unit"));

  GradedAlgebra a = located(path, [&] {
    return GradedAlgebra(f, g, std::move(labels), std::move(degrees), std::move(products), std::move(unit));
  });
  if (validate) {
    auto check = verify_grading(a);
    if (!check.ok) throw InputError("invalid graded algebra: " + check.message);
  }
  return a;
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": JSON syntax error");
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Field field_from_json(const json& j) {
  const json& kind = member(j, "kind", "field");
  if (kind == "Q") return Field::rationals();
  if (kind == "GF") {
    auto p = as_count(member(j, "p", "field"), "field.p");
    return located("field.p", [&] { return Field::prime(p); });
  }
  fail("field.kind", "expected \"Q\" or \"GF\"");
}

json field_to_json(Field f) {
  if (f.is_rational()) return {{"kind", "Q"}};
  return {{"kind", "GF"}, {"p", f.characteristic()}};
}

Group group_from_json(const json& j) { return group_at(j, "group"); }

json group_to_json(const Group& g) {
  switch (g.kind()) {
    case Group::Kind::FreeAbelian:
      return {{"kind", "free_abelian"}, {"rank", g.rank()}};
    case Group::Kind::Free:
      return {{"kind", "free"}, {"rank", g.rank()}, {"labels", g.generator_labels()}};
    case Group::Kind::Finite:
      break;
  }
  const FiniteGroup& t = g.table();
  if (same_labels(t, make_cyclic(t.order()))) return {{"kind", "cyclic"}, {"n", t.order()}};
  for (std::size_t n : {3, 4})
    if (t.order() == (n == 3 ? 6u : 24u) && same_labels(t, make_symmetric(n)))
      return {{"kind", "symmetric"}, {"n", n}};
  json table = json::array();
  for (std::size_t a = 0; a < t.order(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < t.order(); ++b) row.push_back(t.mul(a, b));
    table.push_back(row);
  }
  return {{"kind", "cayley"}, {"table", table}, {"identity", t.identity()}, {"labels", t.labels()}};
}

GroupElement element_from_json(const Group& g, const json& j) { return element_at(g, j, "element"); }

json element_to_json(const Group& g, const GroupElement& e) {
  switch (g.kind()) {
    case Group::Kind::Finite:
      return g.index(e);
    case Group::Kind::FreeAbelian:
      if (g.rank() == 1) return e.code[0];
      return e.code;
    case Group::Kind::Free:
      return g.format(e);
  }
  return nullptr;
}

json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(Field f, const json& j) { return scalar_at(f, j, "scalar"); }

GradedAlgebra algebra_from_json(const json& j, bool validate) { return algebra_at(j, "", validate); }

json algebra_to_json(const GradedAlgebra& a) {
  json degrees = json::array();
  for (const auto& d : a.degrees()) degrees.push_back(element_to_json(a.group(), d));
  json products = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (!is_zero(a.product(i, k))) products.push_back(json::array({i, k, sparse(a.product(i, k))}));
  json out = {{"field", field_to_json(a.field())},
              {"group", group_to_json(a.group())},
              {"basis", a.labels()},
              {"degrees", degrees},
              {"products", products}};
  if (a.unit()) out["unit"] = sparse(*a.unit());
  return out;
}

GradedAlgebra parse_algebra(const std::string& text, bool validate) {
  return algebra_from_json(parse_json(text), validate);
}

std::string render_algebra(const GradedAlgebra& a) {
  // one line per top-level key and per product entry
  const json j = algebra_to_json(a);
  std::string out = "{\n";
  bool first = true;
  for (const char* key : {"field", "group", "basis", "degrees", "products", "unit"}) {
    if (!j.contains(key)) continue;
    out += std::string(first ? "" : ",\n") + "  \"" + key + "\": ";
    first = false;
    const json& v = j[key];
    if (std::string(key) == "products" && !v.empty()) {
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) out += "    " + v[i].dump() + (i + 1 < v.size() ? ",\n" : "\n");
      out += "  ]";
    } else {
      out += v.dump();
    }
  }
  return out + "\n}\n";
}

GradedMorphism hom_from_json(const json& j, const std::filesystem::path& base) {
  auto side = [&](const std::string& key) {
    const json& v = member(j, key, "");
    if (v.is_string()) {
      std::filesystem::path p(v.get<std::string>());
      if (p.is_relative()) p = base / p;
      return std::make_shared<const GradedAlgebra>(algebra_from_json(read_json_file(p)));
    }
    return std::make_shared<const GradedAlgebra>(algebra_at(v, key, true));
  };
  AlgebraPtr dom = side("domain"), cod = side("codomain");
  const auto& rows = as_array(member(j, "matrix", ""), "matrix");
  if (rows.size() != cod->dim()) fail("matrix", "expected one row per codomain basis vector");
  Matrix m(dom->field(), cod->dim(), dom->dim());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string p = index_path("matrix", r);
    const auto& row = as_array(rows[r], p);
    if (row.size() != dom->dim()) fail(p, "expected one entry per domain basis vector");
    for (std::size_t c = 0; c < row.size(); ++c) m.set(r, c, scalar_at(dom->field(), row[c], index_path(p, c)));
  }
  if (dom->field() != cod->field()) fail("codomain.field", "domain and codomain fields differ");
  auto f = GradedMorphism::analyze(dom, cod, std::move(m));
  if (j.contains("unital") && j["unital"].is_boolean() && j["unital"].get<bool>() && !f.is_unital())
    throw InputError("morphism is declared unital but does not send the unit to the unit");
  return f;
}

json hom_to_json(const GradedMorphism& f) {
  json rows = json::array();
  const Matrix& m = f.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"domain", algebra_to_json(*f.domain())},
          {"codomain", algebra_to_json(*f.codomain())},
          {"matrix", rows},
          {"unital", f.is_unital()}};
}

GroupHom group_hom_from_json(const json& j) {
  Group dom = group_at(member(j, "domain", ""), "domain");
  Group cod = group_at(member(j, "codomain", ""), "codomain");
  const auto& imgs = as_array(member(j, "images", ""), "images");
  std::vector<GroupElement> images;
  for (std::size_t i = 0; i < imgs.size(); ++i) images.push_back(element_at(cod, imgs[i], index_path("images", i)));
  if (j.contains("generators")) {
    const auto& gens = as_array(j["generators"], "generators");
    std::vector<GroupElement> g;
    for (std::size_t i = 0; i < gens.size(); ++i) g.push_back(element_at(dom, gens[i], index_path("generators", i)));
    return located("images", [&] { return GroupHom::from_generators(dom, cod, g, images); });
  }
  GroupHom h = located("images", [&] { return GroupHom(dom, cod, images); });
  if (!h.is_homomorphism()) fail("images", "the map is not a group homomorphism");
  return h;
}

json group_hom_to_json(const GroupHom& h) {
  json images = json::array();
  for (const auto& e : h.images()) images.push_back(element_to_json(h.codomain(), e));
  return {{"domain", group_to_json(h.domain())}, {"codomain", group_to_json(h.codomain())}, {"images", images}};
}

}  // namespace gradalg::io
