#include "gradalg/group_algebra.hpp"

#include "gradalg/constructions.hpp"
#include "gradalg/error.hpp"

#include <numeric>

namespace gradalg {

bool one_dim_char_trivial(const FiniteGroup& g, Field f) {
  if (f.is_rational()) return g.abelianization_order() % 2 == 1;
  return one_dim_char_trivial(g, f.characteristic());
}

bool one_dim_char_trivial(const FiniteGroup& g, std::uint64_t q) {
  if (q < 2) throw InputError("field size must be at least 2");
  return std::gcd<std::uint64_t, std::uint64_t>(g.abelianization_exponent(), q - 1) == 1;
}

namespace {

// basis index of u_g for every element index g
std::vector<std::size_t> element_basis(const GradedAlgebra& a) {
  if (!a.group().is_finite()) throw InputError("group algebra needs a finite grading group");
  const auto& g = a.group().table();
  if (a.dim() != g.order()) throw InputError("dimension differs from the group order");
  std::vector<std::size_t> basis(g.order(), g.order());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto k = a.group().index(a.degree(i));
    if (basis[k] != g.order()) throw InputError("two basis vectors share a degree");
    basis[k] = i;
  }
  const Field f = a.field();
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (a.product(basis[x], basis[y]) != unit_vector(f, a.dim(), basis[g.mul(x, y)]))
        throw InputError("basis products are not u_g u_h = u_gh");
  return basis;
}

void require_standard(const GradedAlgebra& a) { element_basis(a); }

}  // namespace

bool is_standard_group_algebra(const GradedAlgebra& a) {
  try {
    require_standard(a);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

GradedHomDecomposition extract_U(const GradedMorphism& phi) {
  const auto& a = *phi.domain();
  const auto& b = *phi.codomain();
  auto basis_a = element_basis(a);
  element_basis(b);
  if (phi.matrix().is_zero()) throw InputError("extract_U needs a nonzero morphism");
  const auto& g = a.group().table();
  std::vector<GroupElement> images;
  std::vector<Scalar> alpha;
  for (std::size_t x = 0; x < g.order(); ++x) {
    Vector v = phi.apply(a.basis_vector(basis_a[x]));
    std::size_t nonzero = 0, at = 0;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) ++nonzero, at = k;
    // a nonzero hom kills no u_g: u_e = u_g u_g^-1 would map to zero
    if (nonzero == 0) throw InternalError("nonzero hom of group algebras kills a basis element");
    if (nonzero > 1) throw InputError("morphism is not graded");
    images.push_back(b.degree(at));
    alpha.push_back(v[at]);
  }
  GroupHom psi(a.group(), b.group(), std::move(images));
  if (!psi.is_homomorphism()) throw InternalError("support map of a graded hom is not a group hom");
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (alpha[g.mul(x, y)] != alpha[x] * alpha[y]) throw InternalError("alpha is not multiplicative");
  return {std::move(psi), std::move(alpha)};
}

GroupHom theta_forward(const GradedMorphism& phi) {
  const auto& g = phi.domain()->group();
  if (!g.is_finite() || !one_dim_char_trivial(g.table(), phi.domain()->field()))
    throw InputError("theta needs a group without nontrivial characters into F^x");
  auto d = extract_U(phi);
  for (const auto& s : d.alpha)
    if (!s.is_one()) throw InternalError("nontrivial character on a group without characters");
  return d.psi;
}

GradedMorphism theta_backward(const AlgebraPtr& fg, const AlgebraPtr& fh, const GroupHom& psi) {
  auto basis_g = element_basis(*fg);
  auto basis_h = element_basis(*fh);
  if (!(psi.domain() == fg->group()) || !(psi.codomain() == fh->group()))
    throw InputError("group hom does not match the group algebras");
  if (!psi.is_homomorphism()) throw InputError("map is not a group homomorphism");
  const Field f = fg->field();
  Matrix m(f, fh->dim(), fg->dim());
  const auto& g = fg->group();
  for (std::size_t x = 0; x < basis_g.size(); ++x)
    m.set(basis_h[fh->group().index(psi.apply(g.element(x)))], basis_g[x], Scalar::one(f));
  return GradedMorphism::analyze(fg, fh, std::move(m));
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  std::vector<std::uint64_t> primes;
  std::uint64_t n = p - 1;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) primes.push_back(n);
  auto pow_mod = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  for (std::uint64_t r = 2; r < p; ++r) {
    bool ok = true;
    for (auto q : primes) ok = ok && pow_mod(r, (p - 1) / q) != 1;
    if (ok) return r;
  }
  throw InternalError("no primitive root");
}

std::size_t TildeProduct::index(const Scalar& alpha, std::size_t g, std::size_t h) const {
  if (alpha.is_zero()) throw InputError("alpha must be nonzero");
  const Field f = algebra->field();
  Scalar power = Scalar::one(f);
  for (std::size_t k = 0;; ++k) {
    if (power == alpha) return (k * left_order + g) * right_order + h;
    power = power * generator;
    if (power.is_one()) throw InternalError("residue outside the unit group");
  }
}

TildeProduct tilde_product(Field f, const FiniteGroup& g, const FiniteGroup& h) {
  if (!f.is_finite()) throw Unsupported("tilde product needs a finite field");
  const std::uint64_t p = f.characteristic();
  const Scalar gen = Scalar::from_int(f, static_cast<long>(primitive_root(p)));
  FiniteGroup units = make_cyclic(p - 1);
  FiniteGroup prod = make_product(make_product(units, g), h);
  std::vector<std::string> labels;
  Scalar power = Scalar::one(f);
  for (std::size_t k = 0; k < p - 1; ++k, power = power * gen)
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t y = 0; y < h.order(); ++y)
        labels.push_back("(" + power.to_string() + "," + g.label(x) + "," + h.label(y) + ")");
  FiniteGroup labelled(prod.order(), prod.table(), prod.identity(), std::move(labels));

  auto algebra = std::make_shared<GradedAlgebra>(group_algebra(f, labelled));
  auto left = std::make_shared<GradedAlgebra>(group_algebra(f, g));
  auto right = std::make_shared<GradedAlgebra>(group_algebra(f, h));
  Matrix m1(f, g.order(), algebra->dim()), m2(f, h.order(), algebra->dim());
  power = Scalar::one(f);
  for (std::size_t k = 0; k < p - 1; ++k, power = power * gen)
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t y = 0; y < h.order(); ++y) {
        const std::size_t i = (k * g.order() + x) * h.order() + y;
        m1.set(x, i, power);
        m2.set(y, i, Scalar::one(f));
      }
  auto pi1 = GradedMorphism::analyze(algebra, left, std::move(m1));
  auto pi2 = GradedMorphism::analyze(algebra, right, std::move(m2));
  return TildeProduct{algebra, left, right, pi1, pi2, gen, g.order(), h.order()};
}

GradedMorphism mediate(const GradedMorphism& phi1, const GradedMorphism& phi2, const TildeProduct& p) {
  const AlgebraPtr& a = phi1.domain();
  if (!(*phi2.domain() == *a)) throw InputError("the two morphisms have different domains");
  if (!(*phi1.codomain() == *p.left) || !(*phi2.codomain() == *p.right))
    throw InputError("the morphisms do not end at the factors of the product");
  if (!phi1.is_graded() || !phi2.is_graded() || !is_graded_injective(phi1) || !is_graded_injective(phi2))
    throw InputError("mediate needs graded injective morphisms");
  for (const auto& [g, idx] : a->components())
    if (idx.size() > 1) throw InputError("component " + a->group().format(g) + " has dimension above one");
  const Field f = a->field();
  Matrix m(f, p.algebra->dim(), a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Vector v1 = phi1.apply(a->basis_vector(i));
    Vector v2 = phi2.apply(a->basis_vector(i));
    auto single = [](const Vector& v) {
      std::size_t at = v.size();
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) {
          if (at != v.size()) throw InputError("image is not a multiple of a group element");
          at = k;
        }
      if (at == v.size()) throw InputError("basis vector maps to zero");
      return at;
    };
    const std::size_t g = single(v1), h = single(v2);
    const Scalar& lambda = v1[g];
    const Scalar& mu = v2[h];
    m.set(p.index(lambda / mu, g, h), i, mu);
  }
  return GradedMorphism::analyze(a, p.algebra, std::move(m));
}

}  // namespace gradalg
