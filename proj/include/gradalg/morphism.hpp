#pragma once

#include "gradalg/algebra.hpp"
#include "gradalg/free_algebra.hpp"

#include <map>
#include <optional>
#include <utility>

namespace gradalg {

using SupportMap = std::map<GroupElement, GroupElement>;

/// Linear map between graded algebras that has been checked to be an algebra
/// homomorphism, together with its grading analysis.
class GradedMorphism {
 public:
  /// `m` is codomain.dim() x domain.dim(). Throws NotAHomError naming the
  /// first basis pair (i, j) with m(e_i e_j) != m(e_i) m(e_j).
  static GradedMorphism analyze(AlgebraPtr domain, AlgebraPtr codomain, Matrix m);
  static GradedMorphism identity(AlgebraPtr a);
  static GradedMorphism zero(AlgebraPtr domain, AlgebraPtr codomain);

  const AlgebraPtr& domain() const { return domain_; }
  const AlgebraPtr& codomain() const { return codomain_; }
  const Matrix& matrix() const { return m_; }
  Vector apply(const Vector& v) const { return m_.apply(v); }

  /// Both algebras unital and the unit maps to the unit.
  bool is_unital() const { return unital_; }
  /// Every nonzero component image lies inside a single codomain component.
  bool is_graded() const { return graded_; }
  /// g -> h with 0 != m(A^(g)) inside B^(h); only meaningful when graded.
  const SupportMap& psi() const { return psi_; }
  bool is_injective() const;
  Subspace kernel() const;

  friend bool operator==(const GradedMorphism& a, const GradedMorphism& b);

 private:
  GradedMorphism() = default;
  AlgebraPtr domain_;
  AlgebraPtr codomain_;
  Matrix m_;
  bool unital_ = false;
  bool graded_ = false;
  SupportMap psi_;
};

/// second after first; requires codomain(first) == domain(second).
GradedMorphism compose(const GradedMorphism& second, const GradedMorphism& first);
/// f after a free morphism into f's domain.
FreeMorphism compose(const GradedMorphism& f, const FreeMorphism& l);

struct InjectivityReport {
  bool ok = true;
  /// Nonzero homogeneous kernel element and its degree when !ok.
  std::optional<Vector> witness;
  std::optional<GroupElement> degree;
};

/// Injective on every homogeneous component. Requires a graded morphism.
InjectivityReport graded_injectivity(const GradedMorphism& f);
bool is_graded_injective(const GradedMorphism& f);

struct MonoReport {
  bool mono = true;
  /// Homogeneous a != b with f(a) = f(b) when !mono.
  std::optional<std::pair<Vector, Vector>> refuting_pair;
};

/// Injectivity on the union of homogeneous components: every component
/// restriction has zero kernel, and for g != h the map
/// (a, b) -> f(a) - f(b) on A^(g) x A^(h) has zero kernel.
MonoReport mono_check(const GradedMorphism& f);

enum class MonoMode { Ambient, Tilde };

struct MonoRefutation {
  FreeMorphism lambda;
  FreeMorphism mu;
  /// x^k = 0 in the source when set (tilde mode, f(a) nilpotent).
  std::optional<std::size_t> truncation;
  /// Tilde mode: lambda and mu were checked graded injective.
  bool graded_injective_certified = false;
};

/// Two different morphisms out of the one-variable algebra with
/// f lambda = f mu, from homogeneous a != b with f(a) = f(b). Tilde mode
/// truncates the variable at the nilpotency index of f(a) and certifies
/// both morphisms graded injective. Throws InputError when a, b do not
/// satisfy the precondition.
MonoRefutation mono_refute(const GradedMorphism& f, const Vector& a, const Vector& b,
                           MonoMode mode = MonoMode::Ambient, bool unital = false);

/// Equalizer of graded alpha, beta: A -> B, the graded subalgebra
/// sum over g of ker((alpha - beta) restricted to A^(g)).
class Equalizer {
 public:
  Equalizer(const GradedMorphism& alpha, const GradedMorphism& beta);

  const AlgebraPtr& algebra() const { return algebra_; }
  const GradedMorphism& inclusion() const { return *inclusion_; }
  /// The unique u with inclusion * u = gamma. Throws InputError when
  /// alpha gamma != beta gamma.
  GradedMorphism factor(const GradedMorphism& gamma) const;

 private:
  Matrix alpha_minus_beta_;
  AlgebraPtr algebra_;
  std::optional<GradedMorphism> inclusion_;
};

}  // namespace gradalg
