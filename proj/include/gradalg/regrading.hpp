#pragma once

#include "gradalg/algebra.hpp"
#include "gradalg/group.hpp"
#include "gradalg/morphism.hpp"

#include <utility>
#include <vector>

namespace gradalg {

/// The same algebra with every degree g replaced by phi(g).
GradedAlgebra U_phi(const GradedAlgebra& a, const GroupHom& phi);

/// phi: G -> H with G finite. Basis (g, b) for g in G and b a basis vector
/// of B of degree phi(g); (g1, a)(g2, b) = (g1 g2, ab); deg (g, b) = g.
struct Pullback {
  AlgebraPtr algebra;
  AlgebraPtr base;
  GroupHom phi;
  /// Basis vector k of `algebra` is (pairs[k].first, basis vector
  /// pairs[k].second of base).
  std::vector<std::pair<GroupElement, std::size_t>> pairs;

  std::size_t index(const GroupElement& g, std::size_t b) const;  // throws InputError
  /// (g, b) -> b, an algebra map K_phi(B) -> B.
  Matrix pair_projection() const;
};

Pullback K_phi(const AlgebraPtr& b, const GroupHom& phi);

/// True for graded morphisms between algebras graded by the same group that
/// send each A^(g) into B^(g).
bool preserves_degrees(const GradedMorphism& f);

/// f: U_phi(A) -> B degree preserving  ==>  a in A^(g) goes to (g, f(a)).
/// `a` is the original G-graded algebra.
GradedMorphism adjunction_transpose(const AlgebraPtr& a, const Pullback& k, const GradedMorphism& f);
/// t: A -> K_phi(B)  ==>  pair projection after t, as a map U_phi(A) -> B.
GradedMorphism adjunction_untranspose(const AlgebraPtr& u_a, const Pullback& k,
                                      const GradedMorphism& t);

/// K_phi on a degree-preserving beta: B -> B'; (g, b) -> (g, beta(b)).
GradedMorphism K_phi_morphism(const Pullback& source, const Pullback& target,
                              const GradedMorphism& beta);

}  // namespace gradalg
