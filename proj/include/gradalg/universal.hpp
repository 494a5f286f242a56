#pragma once

#include "gradalg/algebra.hpp"
#include "gradalg/group.hpp"
#include "gradalg/morphism.hpp"
#include "gradalg/presentation.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gradalg {

/// Presentation of the universal grading group: one generator [g] per
/// support element, one relator [g][h][gh]^-1 per pair with
/// A^(g) A^(h) != 0, in pair order.
struct UniversalGroup {
  Group grading_group;
  PresentedGroup presentation;
  /// kappa: generator i stands for support[i].
  std::vector<GroupElement> support;
  /// relator_pairs[r] produced relator r.
  std::vector<std::pair<GroupElement, GroupElement>> relator_pairs;

  std::size_t generator(const GroupElement& g) const;  // throws InputError
  /// The free group on the generators (domain of realization and R maps).
  Group free_group() const;
};

UniversalGroup universal_group(const GradedAlgebra& a);

/// [g] -> g as a homomorphism out of the free group on the generators;
/// every relator is checked to map to the identity.
GroupHom realization_hom(const GradedAlgebra& a, const UniversalGroup& u);

/// For a completed coset enumeration of u's own presentation: the images of
/// the coset representatives are pairwise distinct and exhaust the finite
/// grading group.
bool realization_is_bijective(const UniversalGroup& u, const GroupHom& realization,
                              const CosetEnumeration& e);

/// Generator map [g] -> [psi(g)] induced by a graded injective morphism, as
/// a hom between free groups on the two generator sets. Throws InputError
/// naming the first pair whose relator is not carried to a relator (which
/// only happens when f is not graded injective).
GroupHom R_on_morphism(const GradedMorphism& f, const UniversalGroup& source,
                       const UniversalGroup& target);
GroupHom R_on_morphism(const GradedMorphism& f);

/// Generator permutation induced by a support bijection psi.
std::vector<std::size_t> relabeling_from(const UniversalGroup& a, const UniversalGroup& b,
                                         const SupportMap& psi);

}  // namespace gradalg
