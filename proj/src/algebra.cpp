#include "gradalg/algebra.hpp"

#include "gradalg/error.hpp"

#include <algorithm>
#include <map>

namespace gradalg {

GradedAlgebra::GradedAlgebra(Field field, Group group, std::vector<std::string> labels,
                             std::vector<GroupElement> degrees, std::vector<Vector> products,
                             std::optional<Vector> unit)
    : field_(field),
      group_(std::move(group)),
      labels_(std::move(labels)),
      degrees_(std::move(degrees)),
      products_(std::move(products)),
      unit_(std::move(unit)) {
  const std::size_t n = labels_.size();
  if (degrees_.size() != n) throw InputError("degree count does not match dimension");
  if (products_.size() != n * n) throw InputError("structure constant table has the wrong size");
  for (const auto& d : degrees_) group_.validate(d);
  for (const auto& p : products_) {
    if (p.size() != n) throw InputError("structure constant vector has the wrong length");
    for (const auto& s : p)
      if (s.field() != field_) throw InputError("structure constant from a different field");
  }
  if (unit_) {
    if (unit_->size() != n) throw InputError("unit vector has the wrong length");
    for (const auto& s : *unit_)
      if (s.field() != field_) throw InputError("unit coefficient from a different field");
  }
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("duplicate basis label");
}

std::optional<std::size_t> GradedAlgebra::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t GradedAlgebra::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw InputError("unknown basis label '" + label + "'");
}

Vector GradedAlgebra::multiply(const Vector& a, const Vector& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw InputError("vector length does not match algebra");
  Vector out = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const Vector& p = product(i, j);
      Scalar c = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) out[k] += c * p[k];
    }
  }
  return out;
}

Vector GradedAlgebra::power(const Vector& a, std::size_t k) const {
  if (k == 0) throw InputError("power exponent must be at least 1");
  Vector out = a;
  for (std::size_t i = 1; i < k; ++i) out = multiply(out, a);
  return out;
}

Vector GradedAlgebra::element(const std::vector<std::pair<std::string, long>>& terms) const {
  Vector v = zero();
  for (const auto& [label, c] : terms) v[index_of(label)] += Scalar::from_int(field_, c);
  return v;
}

std::vector<std::size_t> GradedAlgebra::component_indices(const GroupElement& g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (degrees_[i] == g) out.push_back(i);
  return out;
}

Subspace GradedAlgebra::component(const GroupElement& g) const {
  std::vector<Vector> basis;
  for (auto i : component_indices(g)) basis.push_back(basis_vector(i));
  return Subspace::span(field_, dim(), basis);
}

std::optional<GroupElement> GradedAlgebra::homogeneous_degree(const Vector& v) const {
  std::optional<GroupElement> deg;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (deg && *deg != degrees_[i]) return std::nullopt;
    deg = degrees_[i];
  }
  return deg;
}

SupportSet GradedAlgebra::support() const { return SupportSet(degrees_.begin(), degrees_.end()); }

PairSet GradedAlgebra::pair_set() const {
  PairSet out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (!is_zero(product(i, j))) out.emplace(degrees_[i], degrees_[j]);
  return out;
}

std::vector<std::pair<GroupElement, std::vector<std::size_t>>> GradedAlgebra::components() const {
  std::map<GroupElement, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < dim(); ++i) by_degree[degrees_[i]].push_back(i);
  return {by_degree.begin(), by_degree.end()};
}

namespace {

std::string coefficient_text(const Scalar& s) {
  if (s.field().is_rational() && s.rational().get_den() == 1) return s.rational().get_num().get_str();
  return s.to_string();
}

}  // namespace

std::string GradedAlgebra::format(const Vector& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.size() && i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (!v[i].is_one()) out += coefficient_text(v[i]) + "*";
    out += labels_[i];
  }
  return out.empty() ? "0" : out;
}

bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
  return a.field_ == b.field_ && a.group_ == b.group_ && a.degrees_ == b.degrees_ &&
         a.products_ == b.products_ && a.unit_ == b.unit_;
}

GradingCheck verify_grading(const GradedAlgebra& a) {
  const std::size_t n = a.dim();
  const Group& g = a.group();
  auto fail = [&](std::string msg, std::size_t i, std::size_t j, std::size_t k) {
    return GradingCheck{false, std::move(msg), std::array<std::size_t, 3>{i, j, k}};
  };
  for (std::size_t i = 0; i < n; ++i)
    if (!g.contains(a.degree(i)))
      return GradingCheck{false, "degree of " + a.label(i) + " is not in the grading group", {}};

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& p = a.product(i, j);
      GroupElement expected = g.multiply(a.degree(i), a.degree(j));
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero() && a.degree(k) != expected)
          return fail("grading violated: " + a.label(i) + "*" + a.label(j) + " has a nonzero " +
                          a.label(k) + " term, but deg " + a.label(k) + " = " +
                          g.format(a.degree(k)) + " != " + g.format(expected),
                      i, j, k);
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = a.zero(), rhs = a.zero();
        const Vector& ij = a.product(i, j);
        const Vector& jk = a.product(j, k);
        for (std::size_t m = 0; m < n; ++m) {
          if (!ij[m].is_zero()) lhs = lhs + ij[m] * a.product(m, k);
          if (!jk[m].is_zero()) rhs = rhs + jk[m] * a.product(i, m);
        }
        if (lhs != rhs)
          return fail("associativity fails on (" + a.label(i) + ", " + a.label(j) + ", " +
                          a.label(k) + ")",
                      i, j, k);
      }

  if (a.unit()) {
    const Vector& u = *a.unit();
    for (std::size_t i = 0; i < n; ++i)
      if (!u[i].is_zero() && !g.is_identity(a.degree(i)))
        return GradingCheck{false, "unit is not homogeneous of identity degree", {}};
    for (std::size_t i = 0; i < n; ++i) {
      Vector e = a.basis_vector(i);
      if (a.multiply(u, e) != e || a.multiply(e, u) != e)
        return GradingCheck{false, "unit is not a two-sided identity on " + a.label(i), {}};
    }
  }
  return {};
}

AlgebraBuilder::AlgebraBuilder(Field field, Group group) : field_(field), group_(std::move(group)) {}

std::size_t AlgebraBuilder::add(const std::string& label, const GroupElement& degree) {
  if (std::find(labels_.begin(), labels_.end(), label) != labels_.end())
    throw InputError("duplicate basis label '" + label + "'");
  group_.validate(degree);
  labels_.push_back(label);
  degrees_.push_back(degree);
  return labels_.size() - 1;
}

namespace {

std::size_t lookup(const std::vector<std::string>& labels, const std::string& label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InputError("unknown basis label '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

AlgebraBuilder& AlgebraBuilder::set(const std::string& i, const std::string& j,
                                    const std::vector<std::pair<std::string, long>>& terms) {
  std::vector<std::pair<std::size_t, Scalar>> sparse;
  for (const auto& [label, c] : terms) sparse.emplace_back(lookup(labels_, label), Scalar::from_int(field_, c));
  entries_.emplace_back(lookup(labels_, i), lookup(labels_, j), std::move(sparse));
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set(std::size_t i, std::size_t j, const Vector& value) {
  std::vector<std::pair<std::size_t, Scalar>> sparse;
  for (std::size_t k = 0; k < value.size(); ++k)
    if (!value[k].is_zero()) sparse.emplace_back(k, value[k]);
  entries_.emplace_back(i, j, std::move(sparse));
  return *this;
}

AlgebraBuilder& AlgebraBuilder::unit(const std::string& label) {
  lookup(labels_, label);
  unit_label_ = label;
  return *this;
}

AlgebraBuilder& AlgebraBuilder::unit_element(const Vector& v) {
  unit_vector_ = v;
  return *this;
}

GradedAlgebra AlgebraBuilder::build_unchecked() const {
  const std::size_t n = labels_.size();
  std::vector<Vector> products(n * n, zero_vector(field_, n));
  std::optional<Vector> unit = unit_vector_;
  if (unit_label_) {
    std::size_t e = lookup(labels_, *unit_label_);
    unit = unit_vector(field_, n, e);
    for (std::size_t x = 0; x < n; ++x) {
      products[e * n + x] = unit_vector(field_, n, x);
      products[x * n + e] = unit_vector(field_, n, x);
    }
  }
  for (const auto& [i, j, sparse] : entries_) {
    if (i >= n || j >= n) throw InputError("product index out of range");
    Vector v = zero_vector(field_, n);
    for (const auto& [k, c] : sparse) {
      if (k >= n) throw InputError("product index out of range");
      v[k] += c;
    }
    products[i * n + j] = std::move(v);
  }
  return GradedAlgebra(field_, group_, labels_, degrees_, std::move(products), std::move(unit));
}

GradedAlgebra AlgebraBuilder::build() const {
  GradedAlgebra a = build_unchecked();
  if (auto check = verify_grading(a); !check.ok) throw InputError("invalid graded algebra: " + check.message);
  return a;
}

}  // namespace gradalg
