#pragma once

#include "gradalg/group.hpp"
#include "gradalg/morphism.hpp"

#include <optional>
#include <string>

namespace gradalg {

struct EquivalenceCheck {
  bool ok = true;
  std::string reason;
  /// Support bijection induced by the map (weak equivalence only).
  SupportMap psi;
};

/// Same grading group and phi(A^(g)) = B^(g) for every g. Throws InputError
/// when phi is not bijective.
EquivalenceCheck check_isomorphism(const GradedMorphism& phi);
/// psi is a group isomorphism and phi(A^(g)) = B^(psi(g)) for every g.
EquivalenceCheck check_equivalence(const GradedMorphism& phi, const GroupHom& psi);
/// Every nonzero component is mapped onto a nonzero component, and the
/// induced map of supports is a bijection.
EquivalenceCheck check_weak_equivalence(const GradedMorphism& phi);

struct WeakEquivalenceSearch {
  enum class Status { Certificate, None, Unknown };
  Status status = Status::Unknown;
  std::optional<GradedMorphism> certificate;
  SupportMap psi;
  std::string reason;
};

/// Decides weak equivalence of A and B: invariant comparison, then support
/// bijections that respect component dimensions, pair sets and products,
/// then a search for a component-preserving algebra isomorphism. Complete
/// over GF(2) and GF(3) when dim <= 6 and components have dim <= 2;
/// elsewhere only signed-permutation blocks are tried and a miss is
/// reported as Unknown.
WeakEquivalenceSearch search_weak_equivalence(const AlgebraPtr& a, const AlgebraPtr& b);

/// The search's completeness envelope.
bool weak_equivalence_search_is_complete(const GradedAlgebra& a);

}  // namespace gradalg
