#include "gradalg/constructions.hpp"

#include "gradalg/error.hpp"

#include <algorithm>

namespace gradalg {

GradedAlgebra group_algebra(Field field, const FiniteGroup& g) {
  return group_algebra(field, Group(g));
}

GradedAlgebra group_algebra(Field field, const Group& group) {
  const auto& g = group.table();
  const std::size_t n = g.order();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("u_" + g.label(i));
  std::vector<Vector> products;
  products.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) products.push_back(unit_vector(field, n, g.mul(a, b)));
  return GradedAlgebra(field, group, std::move(labels), group.elements(), std::move(products),
                       unit_vector(field, n, g.identity()));
}

GradedAlgebra matrix_algebra_elementary(Field field, const Group& group,
                                        const std::vector<GroupElement>& degrees) {
  const std::size_t n = degrees.size();
  const std::size_t d = n * n;
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  auto name = [n](std::size_t i, std::size_t j) {
    if (n < 10) return "e" + std::to_string(i + 1) + std::to_string(j + 1);
    return "e" + std::to_string(i + 1) + "," + std::to_string(j + 1);
  };
  std::vector<std::string> labels;
  std::vector<GroupElement> degs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back(name(i, j));
      degs.push_back(group.multiply(degrees[i], group.inverse(degrees[j])));
    }
  std::vector<Vector> products(d * d, zero_vector(field, d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) products[idx(i, j) * d + idx(j, l)] = unit_vector(field, d, idx(i, l));
  Vector unit = zero_vector(field, d);
  for (std::size_t i = 0; i < n; ++i) unit[idx(i, i)] = Scalar::one(field);
  return GradedAlgebra(field, group, std::move(labels), std::move(degs), std::move(products),
                       n ? std::optional<Vector>(unit) : std::nullopt);
}

GradedAlgebra direct_sum(const std::vector<GradedAlgebra>& summands) {
  if (summands.empty()) throw InputError("direct sum of no algebras");
  const Field f = summands.front().field();
  const Group& group = summands.front().group();
  std::size_t total = 0;
  for (const auto& s : summands) {
    if (s.field() != f || !(s.group() == group))
      throw InputError("direct sum needs a common field and grading group");
    total += s.dim();
  }
  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  std::vector<Vector> products(total * total, zero_vector(f, total));
  std::size_t offset = 0;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const auto& s = summands[k];
    for (std::size_t i = 0; i < s.dim(); ++i) {
      labels.push_back(summands.size() > 1 ? s.label(i) + "." + std::to_string(k + 1) : s.label(i));
      degrees.push_back(s.degree(i));
      for (std::size_t j = 0; j < s.dim(); ++j) {
        Vector& p = products[(offset + i) * total + offset + j];
        const Vector& src = s.product(i, j);
        for (std::size_t m = 0; m < s.dim(); ++m) p[offset + m] = src[m];
      }
    }
    offset += s.dim();
  }
  return GradedAlgebra(f, group, std::move(labels), std::move(degrees), std::move(products));
}

Subspace generated_ideal(const GradedAlgebra& a, const std::vector<Vector>& generators) {
  Subspace ideal = Subspace::span(a.field(), a.dim(), generators);
  for (;;) {
    std::vector<Vector> vectors = ideal.basis();
    for (const auto& v : ideal.basis())
      for (std::size_t i = 0; i < a.dim(); ++i) {
        Vector e = a.basis_vector(i);
        vectors.push_back(a.multiply(v, e));
        vectors.push_back(a.multiply(e, v));
      }
    Subspace next = Subspace::span(a.field(), a.dim(), vectors);
    if (next.dim() == ideal.dim()) return ideal;
    ideal = std::move(next);
  }
}

Quotient quotient(const GradedAlgebra& a, const std::vector<Vector>& generators) {
  const Field f = a.field();
  Subspace ideal = generated_ideal(a, generators);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!std::binary_search(ideal.pivots().begin(), ideal.pivots().end(), i)) keep.push_back(i);
  const std::size_t m = keep.size();

  // Coordinates of v + I in the basis {e_k + I : k in keep}.
  auto project = [&](const Vector& v) {
    Vector r = ideal.reduce(v);
    Vector out;
    for (auto k : keep) out.push_back(r[k]);
    return out;
  };

  Matrix projection(f, m, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) projection.set_column(i, project(a.basis_vector(i)));

  std::size_t homogeneous_dim = 0;
  for (const auto& g : a.support())
    homogeneous_dim += subspace_intersect(ideal, a.component(g)).dim();
  const bool graded = homogeneous_dim == ideal.dim();

  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  Group group = graded ? a.group() : Group::trivial();
  for (auto k : keep) {
    labels.push_back(a.label(k));
    degrees.push_back(graded ? a.degree(k) : group.identity());
  }
  std::vector<Vector> products;
  for (auto i : keep)
    for (auto j : keep) products.push_back(project(a.product(i, j)));
  std::optional<Vector> unit;
  if (a.unit() && m > 0) unit = project(*a.unit());
  return Quotient{GradedAlgebra(f, group, std::move(labels), std::move(degrees), std::move(products),
                                std::move(unit)),
                  std::move(projection), std::move(ideal)};
}

GradedAlgebra trivial_grading(const GradedAlgebra& a) {
  Group trivial;
  std::vector<Vector> products;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) products.push_back(a.product(i, j));
  return GradedAlgebra(a.field(), trivial, a.labels(),
                       std::vector<GroupElement>(a.dim(), trivial.identity()), std::move(products),
                       a.unit());
}

bool has_trivial_grading(const GradedAlgebra& a) {
  for (const auto& d : a.degrees())
    if (!a.group().is_identity(d)) return false;
  return true;
}

GradedAlgebra zero_algebra(Field field) {
  return GradedAlgebra(field, Group::trivial(), {}, {}, {});
}

GradedAlgebra direct_product_trivial(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!has_trivial_grading(a) || !has_trivial_grading(b))
    throw InputError("direct_product_trivial needs trivially graded inputs");
  if (a.field() != b.field()) throw InputError("direct product needs a common field");
  const Field f = a.field();
  const std::size_t n = a.dim() + b.dim();
  Group trivial;
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("1:" + l);
  for (const auto& l : b.labels()) labels.push_back("2:" + l);
  std::vector<Vector> products(n * n, zero_vector(f, n));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) products[i * n + j][k] = a.product(i, j)[k];
  const std::size_t o = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k) products[(o + i) * n + o + j][o + k] = b.product(i, j)[k];
  std::optional<Vector> unit;
  if (a.unit() && b.unit()) {
    unit = zero_vector(f, n);
    for (std::size_t k = 0; k < a.dim(); ++k) (*unit)[k] = (*a.unit())[k];
    for (std::size_t k = 0; k < b.dim(); ++k) (*unit)[o + k] = (*b.unit())[k];
  }
  return GradedAlgebra(f, trivial, std::move(labels), std::vector<GroupElement>(n, trivial.identity()),
                       std::move(products), std::move(unit));
}

}  // namespace gradalg
