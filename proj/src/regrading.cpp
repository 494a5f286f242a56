#include "gradalg/regrading.hpp"

#include "gradalg/error.hpp"

#include <algorithm>

namespace gradalg {

GradedAlgebra U_phi(const GradedAlgebra& a, const GroupHom& phi) {
  if (!(phi.domain() == a.group())) throw InputError("group map does not start at the grading group");
  std::vector<GroupElement> degrees;
  for (const auto& d : a.degrees()) degrees.push_back(phi.apply(d));
  std::vector<Vector> products;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) products.push_back(a.product(i, j));
  return GradedAlgebra(a.field(), phi.codomain(), a.labels(), std::move(degrees), std::move(products),
                       a.unit());
}

std::size_t Pullback::index(const GroupElement& g, std::size_t b) const {
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (pairs[k].first == g && pairs[k].second == b) return k;
  throw InputError("pair is not a basis vector of the pullback");
}

Matrix Pullback::pair_projection() const {
  Matrix m(base->field(), base->dim(), algebra->dim());
  for (std::size_t k = 0; k < pairs.size(); ++k) m.set(pairs[k].second, k, Scalar::one(base->field()));
  return m;
}

Pullback K_phi(const AlgebraPtr& b, const GroupHom& phi) {
  if (!(phi.codomain() == b->group())) throw InputError("group map does not end at the grading group");
  if (!phi.domain().is_finite()) throw Unsupported("K_phi needs a finite source group");
  const Group& g = phi.domain();
  const Field f = b->field();
  Pullback out{nullptr, b, phi, {}};
  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  for (const auto& x : g.elements())
    for (std::size_t i = 0; i < b->dim(); ++i)
      if (b->degree(i) == phi.apply(x)) {
        out.pairs.emplace_back(x, i);
        labels.push_back("(" + g.format(x) + "," + b->label(i) + ")");
        degrees.push_back(x);
      }
  const std::size_t n = out.pairs.size();
  std::vector<Vector> products;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      Vector v = zero_vector(f, n);
      const auto xy = g.multiply(out.pairs[p].first, out.pairs[q].first);
      const Vector& prod = b->product(out.pairs[p].second, out.pairs[q].second);
      for (std::size_t k = 0; k < prod.size(); ++k)
        if (!prod[k].is_zero()) v[out.index(xy, k)] = prod[k];
      products.push_back(std::move(v));
    }
  std::optional<Vector> unit;
  if (b->unit()) {
    unit = zero_vector(f, n);
    for (std::size_t k = 0; k < b->dim(); ++k)
      if (!(*b->unit())[k].is_zero()) (*unit)[out.index(g.identity(), k)] = (*b->unit())[k];
  }
  out.algebra = std::make_shared<GradedAlgebra>(f, g, std::move(labels), std::move(degrees),
                                                std::move(products), std::move(unit));
  return out;
}

bool preserves_degrees(const GradedMorphism& f) {
  if (!f.is_graded() || !(f.domain()->group() == f.codomain()->group())) return false;
  return std::all_of(f.psi().begin(), f.psi().end(), [](const auto& kv) { return kv.first == kv.second; });
}

GradedMorphism adjunction_transpose(const AlgebraPtr& a, const Pullback& k, const GradedMorphism& f) {
  if (!preserves_degrees(f)) throw InputError("transpose needs a degree-preserving morphism");
  if (!(*f.codomain() == *k.base)) throw InputError("morphism does not end at the pullback base");
  if (f.domain()->dim() != a->dim()) throw InputError("morphism does not start at U_phi(A)");
  const Field fld = a->field();
  Matrix t(fld, k.algebra->dim(), a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Vector image = f.apply(a->basis_vector(i));
    for (std::size_t b = 0; b < image.size(); ++b)
      if (!image[b].is_zero()) t.set(k.index(a->degree(i), b), i, image[b]);
  }
  return GradedMorphism::analyze(a, k.algebra, std::move(t));
}

GradedMorphism adjunction_untranspose(const AlgebraPtr& u_a, const Pullback& k,
                                      const GradedMorphism& t) {
  if (!preserves_degrees(t)) throw InputError("untranspose needs a degree-preserving morphism");
  if (!(*t.codomain() == *k.algebra)) throw InputError("morphism does not end at the pullback");
  return GradedMorphism::analyze(u_a, k.base, k.pair_projection() * t.matrix());
}

GradedMorphism K_phi_morphism(const Pullback& source, const Pullback& target,
                              const GradedMorphism& beta) {
  if (!preserves_degrees(beta)) throw InputError("K_phi needs a degree-preserving morphism");
  if (!(*beta.domain() == *source.base) || !(*beta.codomain() == *target.base))
    throw InputError("morphism does not connect the pullback bases");
  const Field f = source.base->field();
  Matrix m(f, target.algebra->dim(), source.algebra->dim());
  for (std::size_t p = 0; p < source.pairs.size(); ++p) {
    const auto& [g, b] = source.pairs[p];
    Vector image = beta.apply(source.base->basis_vector(b));
    for (std::size_t c = 0; c < image.size(); ++c)
      if (!image[c].is_zero()) m.set(target.index(g, c), p, image[c]);
  }
  return GradedMorphism::analyze(source.algebra, target.algebra, std::move(m));
}

}  // namespace gradalg
