#include "gradalg/support_category.hpp"

#include "gradalg/error.hpp"

#include <algorithm>

namespace gradalg {

std::string SupportTriple::violation() const {
  for (const auto& g : support)
    if (!group.contains(g)) return "support element outside the group";
  for (const auto& [g, h] : pairs) {
    if (!support.count(g) || !support.count(h)) return "pair outside S x S";
    if (!support.count(group.multiply(g, h)))
      return "product " + group.format(group.multiply(g, h)) + " of a pair is not in S";
  }
  return {};
}

std::string TripleMorphism::violation() const {
  for (const auto& g : domain)
    if (!source.support.count(g)) return "R is not inside S1";
  for (const auto& p : pairs) {
    if (!source.pairs.count(p)) return "Q is not inside P1";
    if (!domain.count(p.first) || !domain.count(p.second)) return "Q is not inside R x R";
  }
  if (psi.size() != domain.size()) return "psi is not defined exactly on R";
  for (const auto& [g, h] : psi) {
    if (!domain.count(g)) return "psi is not defined exactly on R";
    if (!target.support.count(h)) return "psi leaves S2";
  }
  const Group& g1 = source.group;
  const Group& g2 = target.group;
  for (const auto& [g, h] : pairs) {
    auto gh = g1.multiply(g, h);
    if (!domain.count(gh)) return "product of a pair in Q is not in R";
    if (g2.multiply(psi.at(g), psi.at(h)) != psi.at(gh)) return "psi is not multiplicative on Q";
    if (!target.pairs.count({psi.at(g), psi.at(h)})) return "psi x psi does not map Q into P2";
  }
  return {};
}

SupportTriple L_object(const GradedAlgebra& a) { return {a.group(), a.support(), a.pair_set()}; }

TripleMorphism L_morphism(const GradedMorphism& f) {
  if (!f.is_graded()) throw InputError("L is only defined on graded morphisms");
  const GradedAlgebra& a = *f.domain();
  const GradedAlgebra& b = *f.codomain();
  TripleMorphism m{L_object(a), L_object(b), {}, {}, f.psi()};
  for (const auto& [g, h] : f.psi()) m.domain.insert(g);

  auto comps = a.components();
  std::vector<std::vector<Vector>> images(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto i : comps[c].second) images[c].push_back(f.apply(a.basis_vector(i)));
  for (std::size_t p = 0; p < comps.size(); ++p)
    for (std::size_t q = 0; q < comps.size(); ++q) {
      if (!m.domain.count(comps[p].first) || !m.domain.count(comps[q].first)) continue;
      bool nonzero = false;
      for (const auto& x : images[p])
        for (const auto& y : images[q])
          if (!nonzero && !is_zero(b.multiply(x, y))) nonzero = true;
      if (nonzero) m.pairs.emplace(comps[p].first, comps[q].first);
    }
  return m;
}

TripleMorphism triple_identity(const SupportTriple& t) {
  TripleMorphism m{t, t, t.support, t.pairs, {}};
  for (const auto& g : t.support) m.psi[g] = g;
  return m;
}

TripleMorphism triple_compose(const TripleMorphism& second, const TripleMorphism& first) {
  if (!(first.target == second.source)) throw InputError("triple morphisms are not composable");
  TripleMorphism m{first.source, second.target, {}, {}, {}};
  for (const auto& g : first.domain) {
    const auto& image = first.psi.at(g);
    if (second.domain.count(image)) {
      m.domain.insert(g);
      m.psi[g] = second.psi.at(image);
    }
  }
  for (const auto& [g, h] : first.pairs)
    if (second.pairs.count({first.psi.at(g), first.psi.at(h)})) m.pairs.emplace(g, h);
  return m;
}

bool triple_leq(const TripleMorphism& m1, const TripleMorphism& m2) {
  if (!(m1.source == m2.source) || !(m1.target == m2.target)) return false;
  if (!std::includes(m2.domain.begin(), m2.domain.end(), m1.domain.begin(), m1.domain.end()))
    return false;
  if (!std::includes(m2.pairs.begin(), m2.pairs.end(), m1.pairs.begin(), m1.pairs.end())) return false;
  for (const auto& [g, h] : m1.psi)
    if (m2.psi.at(g) != h) return false;
  return true;
}

TripleDefect triple_defect(const TripleMorphism& smaller, const TripleMorphism& larger) {
  TripleDefect d;
  std::set_difference(larger.domain.begin(), larger.domain.end(), smaller.domain.begin(),
                      smaller.domain.end(), std::inserter(d.missing_domain, d.missing_domain.end()));
  std::set_difference(larger.pairs.begin(), larger.pairs.end(), smaller.pairs.begin(),
                      smaller.pairs.end(), std::inserter(d.missing_pairs, d.missing_pairs.end()));
  return d;
}

std::string format_support(const Group& g, const SupportSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : s) {
    out += (first ? "" : ", ") + g.format(e);
    first = false;
  }
  return out + "}";
}

std::string format_pairs(const Group& g, const PairSet& p) {
  std::string out = "{";
  bool first = true;
  for (const auto& [a, b] : p) {
    out += (first ? "(" : ", (") + g.format(a) + ", " + g.format(b) + ")";
    first = false;
  }
  return out + "}";
}

}  // namespace gradalg
