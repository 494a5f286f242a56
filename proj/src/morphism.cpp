#include "gradalg/morphism.hpp"

#include "gradalg/error.hpp"

#include <algorithm>
#include <set>

namespace gradalg {

namespace {

// Columns of m restricted to `cols`.
Matrix restrict_columns(const Matrix& m, const std::vector<std::size_t>& cols) {
  Matrix out(m.field(), m.rows(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) out.set_column(c, m.column(cols[c]));
  return out;
}

Vector embed(const Vector& coords, const std::vector<std::size_t>& cols, Field f, std::size_t dim) {
  Vector v = zero_vector(f, dim);
  for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = coords[c];
  return v;
}

}  // namespace

GradedMorphism GradedMorphism::analyze(AlgebraPtr domain, AlgebraPtr codomain, Matrix m) {
  if (!domain || !codomain) throw InputError("morphism needs a domain and a codomain");
  const GradedAlgebra& a = *domain;
  const GradedAlgebra& b = *codomain;
  if (m.rows() != b.dim() || m.cols() != a.dim())
    throw InputError("morphism matrix must be " + std::to_string(b.dim()) + " x " +
                     std::to_string(a.dim()));
  if (a.field() != b.field() || (m.rows() && m.cols() && m.field() != a.field()))
    throw InputError("morphism between algebras over different fields");

  std::vector<Vector> images;
  for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(m.column(i));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (m.apply(a.product(i, j)) != b.multiply(images[i], images[j]))
        throw NotAHomError("not an algebra homomorphism: f(" + a.label(i) + "*" + a.label(j) +
                           ") != f(" + a.label(i) + ")*f(" + a.label(j) + ")");

  GradedMorphism f;
  f.domain_ = std::move(domain);
  f.codomain_ = std::move(codomain);
  f.unital_ = a.unit() && b.unit() && m.apply(*a.unit()) == *b.unit();
  f.graded_ = true;
  for (const auto& [g, idx] : a.components()) {
    std::optional<GroupElement> target;
    for (auto i : idx)
      for (std::size_t k = 0; k < b.dim(); ++k) {
        if (images[i][k].is_zero()) continue;
        if (target && *target != b.degree(k)) f.graded_ = false;
        target = b.degree(k);
      }
    if (target) f.psi_[g] = *target;
  }
  if (!f.graded_) f.psi_.clear();
  f.m_ = std::move(m);
  return f;
}

GradedMorphism GradedMorphism::identity(AlgebraPtr a) {
  Matrix m = Matrix::identity(a->field(), a->dim());
  return analyze(a, a, std::move(m));
}

GradedMorphism GradedMorphism::zero(AlgebraPtr domain, AlgebraPtr codomain) {
  Matrix m(domain->field(), codomain->dim(), domain->dim());
  return analyze(std::move(domain), std::move(codomain), std::move(m));
}

bool GradedMorphism::is_injective() const { return rank(m_) == domain_->dim(); }

Subspace GradedMorphism::kernel() const {
  if (m_.cols() == 0) return Subspace(domain_->field(), 0);
  return gradalg::kernel(m_);
}

bool operator==(const GradedMorphism& a, const GradedMorphism& b) {
  return *a.domain_ == *b.domain_ && *a.codomain_ == *b.codomain_ && a.m_ == b.m_;
}

GradedMorphism compose(const GradedMorphism& second, const GradedMorphism& first) {
  if (!(*first.codomain() == *second.domain())) throw InputError("morphisms are not composable");
  return GradedMorphism::analyze(first.domain(), second.codomain(), second.matrix() * first.matrix());
}

FreeMorphism compose(const GradedMorphism& f, const FreeMorphism& l) {
  if (!(*l.target() == *f.domain())) throw InputError("morphisms are not composable");
  std::vector<Vector> images;
  for (const auto& v : l.images()) images.push_back(f.apply(v));
  return FreeMorphism(l.source(), f.codomain(), std::move(images));
}

InjectivityReport graded_injectivity(const GradedMorphism& f) {
  if (!f.is_graded()) throw InputError("graded injectivity needs a graded morphism");
  const GradedAlgebra& a = *f.domain();
  for (const auto& [g, idx] : a.components()) {
    Subspace k = gradalg::kernel(restrict_columns(f.matrix(), idx));
    if (k.dim() > 0)
      return InjectivityReport{false, embed(k.basis().front(), idx, a.field(), a.dim()), g};
  }
  return {};
}

bool is_graded_injective(const GradedMorphism& f) { return graded_injectivity(f).ok; }

MonoReport mono_check(const GradedMorphism& f) {
  if (!f.is_graded()) throw InputError("mono_check needs a graded morphism");
  const GradedAlgebra& a = *f.domain();
  auto report = graded_injectivity(f);
  if (!report.ok) return MonoReport{false, std::make_pair(*report.witness, a.zero())};

  auto comps = a.components();
  for (std::size_t p = 0; p < comps.size(); ++p)
    for (std::size_t q = p + 1; q < comps.size(); ++q) {
      const auto& ip = comps[p].second;
      const auto& iq = comps[q].second;
      // [f|A^(g) | -f|A^(h)] (x, y) = 0  <=>  f(x) = f(y)
      Matrix joint(a.field(), f.matrix().rows(), ip.size() + iq.size());
      for (std::size_t c = 0; c < ip.size(); ++c) joint.set_column(c, f.matrix().column(ip[c]));
      for (std::size_t c = 0; c < iq.size(); ++c)
        joint.set_column(ip.size() + c, -Scalar::one(a.field()) * f.matrix().column(iq[c]));
      Subspace k = gradalg::kernel(joint);
      if (k.dim() == 0) continue;
      Vector v = k.basis().front();
      Vector x(v.begin(), v.begin() + static_cast<long>(ip.size()));
      Vector y(v.begin() + static_cast<long>(ip.size()), v.end());
      return MonoReport{false, std::make_pair(embed(x, ip, a.field(), a.dim()),
                                              embed(y, iq, a.field(), a.dim()))};
    }
  return {};
}

MonoRefutation mono_refute(const GradedMorphism& f, const Vector& a, const Vector& b, MonoMode mode,
                           bool unital) {
  const GradedAlgebra& dom = *f.domain();
  if (a.size() != dom.dim() || b.size() != dom.dim()) throw InputError("vectors do not fit the domain");
  if (a == b) throw InputError("mono_refute needs a != b");
  auto homogeneous = [&](const Vector& v) { return is_zero(v) || dom.homogeneous_degree(v); };
  if (!homogeneous(a) || !homogeneous(b)) throw InputError("mono_refute needs homogeneous a and b");
  if (f.apply(a) != f.apply(b)) throw InputError("mono_refute needs f(a) = f(b)");
  if (unital && !dom.is_unital()) throw InputError("unital refutation needs a unital domain");

  std::optional<std::size_t> truncation;
  bool certified = false;
  if (mode == MonoMode::Tilde) {
    if (!is_graded_injective(f)) throw InputError("tilde mode needs a graded injective morphism");
    const GradedAlgebra& cod = *f.codomain();
    Vector fa = f.apply(a);
    if (is_zero(fa)) throw InputError("f(a) = 0 forces a = b = 0 for graded injective f");
    Vector p = fa;
    for (std::size_t k = 1; k <= cod.dim() + 1; ++k) {
      if (is_zero(p)) {
        truncation = k;
        break;
      }
      p = cod.multiply(p, fa);
    }
  }

  AlgebraPtr target = f.domain();
  FreeGradedAlgebra source = FreeGradedAlgebra::one_variable(unital, truncation);
  MonoRefutation out{FreeMorphism(source, target, {a}), FreeMorphism(source, target, {b}), truncation,
                     false};
  if (!out.lambda.well_defined() || !out.mu.well_defined())
    throw InputError("generator images do not satisfy the truncation relation");

  if (mode == MonoMode::Tilde) {
    // With x^k = 0 the components are F x^n for n < k; otherwise a is not
    // nilpotent once a^(dim A + 1) != 0, so every power is nonzero.
    const std::size_t len = truncation ? *truncation : dom.dim() + 1;
    certified = out.lambda.is_graded_up_to(len) && out.mu.is_graded_up_to(len) &&
                out.lambda.is_graded_injective_up_to(len) && out.mu.is_graded_injective_up_to(len);
    if (!truncation)
      certified = certified && !is_zero(dom.power(a, dom.dim() + 1)) &&
                  !is_zero(dom.power(b, dom.dim() + 1));
    out.graded_injective_certified = certified;
  }
  return out;
}

Equalizer::Equalizer(const GradedMorphism& alpha, const GradedMorphism& beta) {
  if (!(*alpha.domain() == *beta.domain()) || !(*alpha.codomain() == *beta.codomain()))
    throw InputError("equalizer needs parallel morphisms");
  if (!alpha.is_graded() || !beta.is_graded()) throw InputError("equalizer needs graded morphisms");
  const GradedAlgebra& a = *alpha.domain();
  const Field f = a.field();
  alpha_minus_beta_ = alpha.matrix() - beta.matrix();

  std::vector<Vector> basis;
  std::vector<GroupElement> degrees;
  for (const auto& [g, idx] : a.components()) {
    Subspace k = gradalg::kernel(restrict_columns(alpha_minus_beta_, idx));
    for (const auto& v : k.basis()) {
      basis.push_back(embed(v, idx, f, a.dim()));
      degrees.push_back(g);
    }
  }
  const std::size_t n = basis.size();
  Matrix incl = Matrix::from_columns(f, a.dim(), basis);

  std::vector<std::string> labels;
  std::set<std::string> used;
  for (std::size_t i = 0; i < n; ++i) {
    std::string label = "c" + std::to_string(i + 1);
    auto single = std::count_if(basis[i].begin(), basis[i].end(), [](const Scalar& s) { return !s.is_zero(); });
    if (single == 1) {
      auto it = std::find_if(basis[i].begin(), basis[i].end(), [](const Scalar& s) { return !s.is_zero(); });
      if (it->is_one()) label = a.label(static_cast<std::size_t>(it - basis[i].begin()));
    }
    while (used.count(label)) label += "'";
    used.insert(label);
    labels.push_back(label);
  }

  std::vector<Vector> products;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto coords = solve(incl, a.multiply(basis[i], basis[j]));
      if (!coords) throw InputError("internal: equalizer subspace is not closed under products");
      products.push_back(*coords);
    }
  std::optional<Vector> unit;
  if (a.unit() && n > 0) unit = solve(incl, *a.unit());

  algebra_ = std::make_shared<GradedAlgebra>(f, a.group(), std::move(labels), std::move(degrees),
                                             std::move(products), std::move(unit));
  if (n == 0) incl = Matrix(f, a.dim(), 0);
  inclusion_ = GradedMorphism::analyze(algebra_, alpha.domain(), std::move(incl));
}

GradedMorphism Equalizer::factor(const GradedMorphism& gamma) const {
  if (!(*gamma.codomain() == *inclusion_->codomain()))
    throw InputError("factor needs a morphism into the equalized algebra");
  const Matrix& g = gamma.matrix();
  Matrix u(g.field(), algebra_->dim(), g.cols());
  for (std::size_t c = 0; c < g.cols(); ++c) {
    Vector col = g.column(c);
    if (!is_zero(alpha_minus_beta_.apply(col)))
      throw InputError("alpha * gamma != beta * gamma; no factorization");
    auto coords = solve(inclusion_->matrix(), col);
    if (!coords) throw InputError("internal: gamma does not land in the equalizer");
    u.set_column(c, *coords);
  }
  return GradedMorphism::analyze(gamma.domain(), algebra_, std::move(u));
}

}  // namespace gradalg
