#pragma once

#include "gradalg/algebra.hpp"
#include "gradalg/morphism.hpp"

#include <string>
#include <vector>

namespace gradalg {

/// Object (G, S, P): S a subset of G, P a set of pairs in S x S whose
/// products lie in S.
struct SupportTriple {
  Group group;
  SupportSet support;
  PairSet pairs;

  /// Empty string when the closure invariants hold, else the first violation.
  std::string violation() const;
  friend bool operator==(const SupportTriple&, const SupportTriple&) = default;
};

/// Morphism (psi, R, Q) between support triples.
struct TripleMorphism {
  SupportTriple source;
  SupportTriple target;
  SupportSet domain;  // R
  PairSet pairs;      // Q
  SupportMap psi;     // defined on R

  std::string violation() const;
  friend bool operator==(const TripleMorphism&, const TripleMorphism&) = default;
};

SupportTriple L_object(const GradedAlgebra& a);
/// R = degrees whose component survives, Q = pairs in R x R whose image
/// components multiply to something nonzero, psi = induced degree map.
TripleMorphism L_morphism(const GradedMorphism& f);
TripleMorphism triple_identity(const SupportTriple& t);
TripleMorphism triple_compose(const TripleMorphism& second, const TripleMorphism& first);
/// R1 in R2, Q1 in Q2 and psi1 = psi2 on R1.
bool triple_leq(const TripleMorphism& m1, const TripleMorphism& m2);

/// What `smaller` lacks relative to `larger` (for m1 <= m2).
struct TripleDefect {
  SupportSet missing_domain;
  PairSet missing_pairs;
  bool empty() const { return missing_domain.empty() && missing_pairs.empty(); }
};
TripleDefect triple_defect(const TripleMorphism& smaller, const TripleMorphism& larger);

std::string format_support(const Group& g, const SupportSet& s);
std::string format_pairs(const Group& g, const PairSet& p);

}  // namespace gradalg
