#pragma once

#include "gradalg/algebra.hpp"
#include "gradalg/group.hpp"
#include "gradalg/morphism.hpp"

#include <cstdint>
#include <vector>

namespace gradalg {

/// Hom(G, F^x) is trivial. Over GF(q) this is gcd(exp G^ab, q - 1) = 1
/// (F^x is cyclic of order q - 1); over Q it holds iff |G^ab| is odd,
/// because the only finite subgroup of Q^x is {1, -1}.
bool one_dim_char_trivial(const FiniteGroup& g, Field f);
/// Same rule for GF(q), q a prime power.
bool one_dim_char_trivial(const FiniteGroup& g, std::uint64_t q);

/// True when `a` is the standard group algebra of its finite grading group
/// up to basis order: one basis vector per element, of that degree, with
/// u_g u_h = u_gh.
bool is_standard_group_algebra(const GradedAlgebra& a);

/// phi(u_g) = alpha[index g] * u_psi(g).
struct GradedHomDecomposition {
  GroupHom psi;
  std::vector<Scalar> alpha;
};

/// Decomposes a nonzero graded hom between standard group algebras. Throws
/// InputError for the zero map or non-standard algebras.
GradedHomDecomposition extract_U(const GradedMorphism& phi);

/// Nonzero graded hom FG -> FH to the group hom psi. Throws InputError when
/// G has a nontrivial character into F^x.
GroupHom theta_forward(const GradedMorphism& phi);
/// u_g -> u_psi(g).
GradedMorphism theta_backward(const AlgebraPtr& fg, const AlgebraPtr& fh, const GroupHom& psi);

/// Group algebra of F^x x G x H over GF(p) with its two projections.
struct TildeProduct {
  AlgebraPtr algebra;
  AlgebraPtr left;   // FG
  AlgebraPtr right;  // FH
  GradedMorphism pi1;
  GradedMorphism pi2;
  /// F^x is generated by this residue; unit k of F^x stands for generator^k.
  Scalar generator;
  std::size_t left_order = 0;
  std::size_t right_order = 0;

  /// Basis index of u_(alpha, g, h); g and h are table indices.
  std::size_t index(const Scalar& alpha, std::size_t g, std::size_t h) const;
};

/// Throws Unsupported over Q.
TildeProduct tilde_product(Field f, const FiniteGroup& g, const FiniteGroup& h);

/// The morphism a -> mu u_(lambda/mu, g, h) where phi1(a) = lambda u_g and
/// phi2(a) = mu u_h on each homogeneous basis vector. Requires graded
/// injective phi1, phi2 and components of dimension at most one.
GradedMorphism mediate(const GradedMorphism& phi1, const GradedMorphism& phi2, const TildeProduct& p);

/// Smallest residue generating GF(p)^x.
std::uint64_t primitive_root(std::uint64_t p);

}  // namespace gradalg
