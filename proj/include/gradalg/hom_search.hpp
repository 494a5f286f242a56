#pragma once

#include "gradalg/morphism.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace gradalg {

struct HomSearchOptions {
  enum class Blocks { Any, Injective, Invertible };

  bool unital = false;
  Blocks blocks = Blocks::Any;
  /// Allow components of the domain to map to zero.
  bool allow_zero_components = true;
  /// Restricts the codomain degree a domain degree may map to; returning
  /// nullopt leaves it free.
  std::function<std::optional<GroupElement>(const GroupElement&)> forced_target;
  /// Coefficients tried for each block entry. Empty means every element of
  /// GF(p), or {0, 1, -1} over Q.
  std::vector<Scalar> coefficients;
  /// Stop after this many results (0 = no limit).
  std::size_t limit = 0;
  /// Abort after this many search nodes (0 = no limit).
  std::size_t node_budget = 0;
};

struct HomSearchResult {
  std::vector<GradedMorphism> homs;
  /// False when the limit or the node budget stopped the search early.
  bool complete = true;
};

/// Graded homomorphisms A -> B whose matrix entries come from the coefficient
/// pool. Each domain component is sent to zero or into one codomain
/// component; multiplicativity is checked as soon as the components involved
/// in a basis product are all assigned. Exhaustive over GF(p) for the
/// default pool.
HomSearchResult enumerate_graded_homs(const AlgebraPtr& a, const AlgebraPtr& b,
                                      const HomSearchOptions& options = {});

}  // namespace gradalg
