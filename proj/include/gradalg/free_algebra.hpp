#pragma once

#include "gradalg/algebra.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gradalg {

/// A monomial in the generators of a free algebra (generator indices). The
/// empty word is the unit and only exists in the unital case.
using FreeWord = std::vector<std::size_t>;

/// Free associative algebra on homogeneous generators, optionally unital,
/// optionally truncated: with truncation k every word of length >= k is zero
/// (for one generator this is F[x]/(x^k)). Never materialized; elements are
/// only ever evaluated through a FreeMorphism.
struct FreeGradedAlgebra {
  Group group;
  std::vector<std::string> generators;
  std::vector<GroupElement> degrees;
  bool unital = false;
  std::optional<std::size_t> truncation;

  /// One generator x of degree 1 in Z.
  static FreeGradedAlgebra one_variable(bool unital, std::optional<std::size_t> truncation = {});

  GroupElement word_degree(const FreeWord& w) const;
  /// True for words that are zero in the algebra (truncated, or the empty
  /// word of a non-unital algebra).
  bool vanishes(const FreeWord& w) const;
  std::string format(const FreeWord& w) const;

  friend bool operator==(const FreeGradedAlgebra&, const FreeGradedAlgebra&) = default;
};

/// Every word over n generators of length in [min_len, max_len], shortlex.
std::vector<FreeWord> words_up_to(std::size_t generators, std::size_t max_len,
                                  std::size_t min_len = 1);

/// Set with a fixed decomposition into disjoint pieces X^(g); the base point
/// is implicit.
struct PointedGradedSet {
  Group group;
  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
};

/// Morphism out of a free graded algebra, determined by generator images.
class FreeMorphism {
 public:
  FreeMorphism(FreeGradedAlgebra source, AlgebraPtr target, std::vector<Vector> images);

  const FreeGradedAlgebra& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const std::vector<Vector>& images() const { return images_; }

  /// Product of generator images; the unit for the empty word.
  Vector evaluate(const FreeWord& w) const;
  /// Words of length `truncation` map to zero, and the unit maps to the unit
  /// in the unital case.
  bool well_defined() const;
  /// Every word up to max_len evaluates to a homogeneous element (or zero)
  /// and words of equal degree land in a common component.
  bool is_graded_up_to(std::size_t max_len) const;
  /// For each source degree, images of the non-vanishing words of that degree
  /// (up to max_len) are linearly independent.
  bool is_graded_injective_up_to(std::size_t max_len) const;

  /// Equal exactly when source, target and generator images agree.
  friend bool operator==(const FreeMorphism& a, const FreeMorphism& b);

 private:
  FreeGradedAlgebra source_;
  AlgebraPtr target_;
  std::vector<Vector> images_;
};

/// The graded morphism from the free non-unital algebra on X into A fixed by
/// `assignment` (one target vector per element of X). Throws InputError when
/// an assigned vector is neither zero nor in A^(deg x).
FreeMorphism free_extend(const PointedGradedSet& x, AlgebraPtr a, std::vector<Vector> assignment);

}  // namespace gradalg
