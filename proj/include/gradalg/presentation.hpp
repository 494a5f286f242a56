#pragma once

#include "gradalg/word.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gradalg {

/// <generators | relators>. Relators are kept freely and cyclically reduced,
/// empty ones dropped; order and repetitions are preserved.
class PresentedGroup {
 public:
  PresentedGroup() = default;
  PresentedGroup(std::vector<std::string> generator_labels, std::vector<Word> relators);
  /// Generators labelled g1..gn.
  PresentedGroup(std::size_t generators, std::vector<Word> relators);

  std::size_t generator_count() const { return labels_.size(); }
  const std::vector<std::string>& generator_labels() const { return labels_; }
  const std::vector<Word>& relators() const { return relators_; }

  std::string to_string() const;

  friend bool operator==(const PresentedGroup&, const PresentedGroup&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Word> relators_;
};

struct Abelianization {
  std::size_t free_rank = 0;
  /// Invariant factors > 1, each dividing the next.
  std::vector<long> torsion;

  friend bool operator==(const Abelianization&, const Abelianization&) = default;
  std::string to_string() const;
};

Abelianization abelianization(const PresentedGroup& p);

struct TietzeResult {
  PresentedGroup presentation;
  bool budget_exhausted = false;
};

/// Repeats until nothing changes: reduce relators, drop duplicates (up to
/// rotation and inversion), then eliminate the lowest-index generator that
/// occurs exactly once in some relator, using the shortest such relator.
/// `budget` bounds the number of eliminations.
TietzeResult tietze_simplify(const PresentedGroup& p, std::size_t budget = 1000);

struct CosetEnumeration {
  std::size_t order = 0;
  /// generator_perms[i][c] = coset c * generator i.
  std::vector<std::vector<std::size_t>> generator_perms;
  /// A word for each coset (the trivial subgroup's cosets are elements).
  std::vector<Word> coset_reps;
};

/// HLT coset enumeration over the trivial subgroup, no lookahead. Returns
/// nullopt when more than `max_cosets` cosets would be defined.
std::optional<CosetEnumeration> todd_coxeter(const PresentedGroup& p, std::size_t max_cosets);

/// Permutation of cosets induced by a word in a completed enumeration.
std::vector<std::size_t> act(const CosetEnumeration& e, const Word& w);

struct Identification {
  enum class Kind { Trivial, Free, Finite, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t rank = 0;   // Free
  std::size_t order = 0;  // Finite (and 1 for Trivial)
  PresentedGroup simplified;
  std::optional<CosetEnumeration> enumeration;

  std::string verdict() const;
};

/// Tietze simplification, then: no generators means trivial, no relators
/// means free, otherwise coset enumeration; anything uncertified is unknown.
Identification identify(const PresentedGroup& p, std::size_t max_cosets = 10000,
                        std::size_t tietze_budget = 1000);

/// Searches generator bijections under which the relator multisets of the
/// two presentations coincide (compared as canonical relators). Returns
/// perm with perm[i] = image of generator i. Exhaustive up to 8 generators.
std::optional<std::vector<std::size_t>> find_relabeling(const PresentedGroup& a,
                                                        const PresentedGroup& b);
/// True when relabeling a's generators by perm yields exactly b's relator
/// multiset (canonical forms).
bool equal_under_relabeling(const PresentedGroup& a, const PresentedGroup& b,
                            const std::vector<std::size_t>& perm);

}  // namespace gradalg
