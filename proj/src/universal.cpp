#include "gradalg/universal.hpp"

#include "gradalg/error.hpp"

#include <algorithm>
#include <set>

namespace gradalg {

std::size_t UniversalGroup::generator(const GroupElement& g) const {
  auto it = std::find(support.begin(), support.end(), g);
  if (it == support.end()) throw InputError("element is not in the support");
  return static_cast<std::size_t>(it - support.begin());
}

Group UniversalGroup::free_group() const {
  return Group::free(presentation.generator_count(), presentation.generator_labels());
}

UniversalGroup universal_group(const GradedAlgebra& a) {
  UniversalGroup u;
  u.grading_group = a.group();
  auto supp = a.support();
  u.support.assign(supp.begin(), supp.end());
  std::vector<std::string> labels;
  for (const auto& g : u.support) labels.push_back("[" + a.group().format(g) + "]");

  std::vector<Word> relators;
  for (const auto& [g, h] : a.pair_set()) {
    const auto gh = a.group().multiply(g, h);
    Word r = Word::generator(u.generator(g)) * Word::generator(u.generator(h)) *
             Word::generator(u.generator(gh), -1);
    relators.push_back(r);
    u.relator_pairs.emplace_back(g, h);
  }
  u.presentation = PresentedGroup(std::move(labels), std::move(relators));
  return u;
}

GroupHom realization_hom(const GradedAlgebra& a, const UniversalGroup& u) {
  GroupHom h(u.free_group(), a.group(), u.support);
  for (const auto& r : u.presentation.relators())
    if (!a.group().is_identity(h.apply(u.free_group().from_word(r))))
      throw InputError("internal: relator " + r.to_string(u.presentation.generator_labels()) +
                       " does not map to the identity");
  return h;
}

bool realization_is_bijective(const UniversalGroup& u, const GroupHom& realization,
                              const CosetEnumeration& e) {
  const Group& g = realization.codomain();
  if (!g.is_finite() || e.order != g.table().order()) return false;
  std::set<GroupElement> images;
  Group free = u.free_group();
  for (const auto& w : e.coset_reps) images.insert(realization.apply(free.from_word(w)));
  return images.size() == e.order;
}

GroupHom R_on_morphism(const GradedMorphism& f, const UniversalGroup& source,
                       const UniversalGroup& target) {
  if (!f.is_graded()) throw InputError("R needs a graded morphism");
  if (auto inj = graded_injectivity(f); !inj.ok)
    throw InputError("R needs a graded injective morphism: component " +
                     source.grading_group.format(*inj.degree) + " has a kernel");
  const auto& psi = f.psi();
  std::set<std::pair<GroupElement, GroupElement>> target_pairs(target.relator_pairs.begin(),
                                                               target.relator_pairs.end());
  const Group& h = target.grading_group;
  for (const auto& [a, b] : source.relator_pairs) {
    auto ab = source.grading_group.multiply(a, b);
    if (!target_pairs.count({psi.at(a), psi.at(b)}) ||
        h.multiply(psi.at(a), psi.at(b)) != psi.at(ab))
      throw InputError("relator of pair (" + source.grading_group.format(a) + ", " +
                       source.grading_group.format(b) + ") is not carried to a relator");
  }
  Group dom = source.free_group(), cod = target.free_group();
  std::vector<GroupElement> images;
  for (const auto& g : source.support) images.push_back(cod.element(target.generator(psi.at(g))));
  return GroupHom(dom, cod, std::move(images));
}

GroupHom R_on_morphism(const GradedMorphism& f) {
  return R_on_morphism(f, universal_group(*f.domain()), universal_group(*f.codomain()));
}

std::vector<std::size_t> relabeling_from(const UniversalGroup& a, const UniversalGroup& b,
                                         const SupportMap& psi) {
  std::vector<std::size_t> perm;
  for (const auto& g : a.support) perm.push_back(b.generator(psi.at(g)));
  return perm;
}

}  // namespace gradalg
