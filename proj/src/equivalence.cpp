#include "gradalg/equivalence.hpp"

#include "gradalg/error.hpp"
#include "gradalg/hom_search.hpp"

#include <algorithm>
#include <map>

namespace gradalg {

namespace {

void require_bijective(const GradedMorphism& phi) {
  if (phi.domain()->dim() != phi.codomain()->dim() || !phi.is_injective())
    throw InputError("map is not invertible");
}

// Checks phi(A^(g)) = B^(target(g)) for each g in supp A.
EquivalenceCheck components_onto(const GradedMorphism& phi,
                                 const std::function<GroupElement(const GroupElement&)>& target) {
  const GradedAlgebra& a = *phi.domain();
  const GradedAlgebra& b = *phi.codomain();
  EquivalenceCheck out;
  for (const auto& [g, idx] : a.components()) {
    std::vector<Vector> images;
    for (auto i : idx) images.push_back(phi.apply(a.basis_vector(i)));
    Subspace image = Subspace::span(a.field(), b.dim(), images);
    GroupElement h = target(g);
    if (!(image == b.component(h))) {
      out.ok = false;
      out.reason = "component " + a.group().format(g) + " is not mapped onto component " +
                   b.group().format(h);
      return out;
    }
    out.psi[g] = h;
  }
  return out;
}

}  // namespace

EquivalenceCheck check_isomorphism(const GradedMorphism& phi) {
  require_bijective(phi);
  if (!(phi.domain()->group() == phi.codomain()->group()))
    return {false, "gradings use different groups", {}};
  auto out = components_onto(phi, [](const GroupElement& g) { return g; });
  if (out.ok && phi.domain()->support() != phi.codomain()->support())
    return {false, "supports differ", {}};
  return out;
}

EquivalenceCheck check_equivalence(const GradedMorphism& phi, const GroupHom& psi) {
  require_bijective(phi);
  if (!(psi.domain() == phi.domain()->group()) || !(psi.codomain() == phi.codomain()->group()))
    return {false, "group map does not connect the grading groups", {}};
  if (!psi.is_homomorphism()) return {false, "group map is not a homomorphism", {}};
  if (!psi.domain().is_finite() || !psi.is_bijective())
    return {false, "group map is not a (finite, checkable) isomorphism", {}};
  auto out = components_onto(phi, [&](const GroupElement& g) { return psi.apply(g); });
  if (!out.ok) return out;
  SupportSet mapped;
  for (const auto& g : phi.domain()->support()) mapped.insert(psi.apply(g));
  if (mapped != phi.codomain()->support()) return {false, "supports do not correspond", {}};
  return out;
}

EquivalenceCheck check_weak_equivalence(const GradedMorphism& phi) {
  require_bijective(phi);
  if (!phi.is_graded()) return {false, "map does not send components into components", {}};
  const auto& psi = phi.psi();
  auto out = components_onto(phi, [&](const GroupElement& g) { return psi.at(g); });
  if (!out.ok) return out;
  SupportSet image;
  for (const auto& [g, h] : out.psi) image.insert(h);
  if (image.size() != out.psi.size() || image != phi.codomain()->support())
    return {false, "induced map of supports is not a bijection", {}};
  return out;
}

bool weak_equivalence_search_is_complete(const GradedAlgebra& a) {
  const Field f = a.field();
  if (!f.is_finite() || (f.characteristic() != 2 && f.characteristic() != 3)) return false;
  if (a.dim() > 6) return false;
  for (const auto& [g, idx] : a.components())
    if (idx.size() > 2) return false;
  return true;
}

WeakEquivalenceSearch search_weak_equivalence(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->field() != b->field()) throw InputError("weak equivalence search needs a common field");
  WeakEquivalenceSearch out;
  auto none = [&](std::string reason) {
    out.status = WeakEquivalenceSearch::Status::None;
    out.reason = std::move(reason);
    return out;
  };
  if (a->dim() != b->dim()) return none("dimensions differ");
  auto ca = a->components(), cb = b->components();
  if (ca.size() != cb.size()) return none("support sizes differ");
  std::vector<std::size_t> da, db;
  for (const auto& c : ca) da.push_back(c.second.size());
  for (const auto& c : cb) db.push_back(c.second.size());
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return none("component dimensions differ");
  const PairSet pa = a->pair_set(), pb = b->pair_set();
  if (pa.size() != pb.size()) return none("pair set sizes differ");

  const bool complete = weak_equivalence_search_is_complete(*a);
  std::map<GroupElement, std::size_t> index_a;
  for (std::size_t i = 0; i < ca.size(); ++i) index_a[ca[i].first] = i;

  const std::size_t n = ca.size();
  std::vector<std::optional<std::size_t>> sigma(n);
  std::vector<bool> used(n, false);
  bool any_sigma = false;

  HomSearchOptions options;
  options.blocks = HomSearchOptions::Blocks::Invertible;
  options.allow_zero_components = false;
  options.limit = 1;
  if (!complete) {
    options.coefficients = {Scalar::zero(a->field()), Scalar::one(a->field()), -Scalar::one(a->field())};
    options.node_budget = 2'000'000;
  }

  // Partial consistency of sigma on components 0..k.
  auto consistent = [&](std::size_t k) {
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j <= k; ++j) {
        if (i != k && j != k) continue;
        const GroupElement &g = ca[i].first, &h = ca[j].first;
        const GroupElement &sg = cb[*sigma[i]].first, &sh = cb[*sigma[j]].first;
        bool in_a = pa.count({g, h}) > 0;
        if (in_a != (pb.count({sg, sh}) > 0)) return false;
        if (!in_a) continue;
        auto it = index_a.find(a->group().multiply(g, h));
        if (it == index_a.end()) return false;
        if (sigma[it->second] && cb[*sigma[it->second]].first != b->group().multiply(sg, sh))
          return false;
      }
    // Products whose result component was assigned before its factors.
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j <= k; ++j) {
        const GroupElement &g = ca[i].first, &h = ca[j].first;
        if (!pa.count({g, h})) continue;
        auto it = index_a.find(a->group().multiply(g, h));
        if (it == index_a.end() || it->second != k) continue;
        if (cb[*sigma[k]].first != b->group().multiply(cb[*sigma[i]].first, cb[*sigma[j]].first))
          return false;
      }
    return true;
  };

  bool found = false;
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (found) return;
    if (k == n) {
      any_sigma = true;
      std::map<GroupElement, GroupElement> forced;
      for (std::size_t i = 0; i < n; ++i) forced[ca[i].first] = cb[*sigma[i]].first;
      options.forced_target = [&forced](const GroupElement& g) -> std::optional<GroupElement> {
        return forced.at(g);
      };
      auto result = enumerate_graded_homs(a, b, options);
      if (!result.homs.empty()) {
        found = true;
        out.certificate = result.homs.front();
        out.psi = forced;
      }
      return;
    }
    for (std::size_t t = 0; t < n && !found; ++t) {
      if (used[t] || cb[t].second.size() != ca[k].second.size()) continue;
      sigma[k] = t;
      used[t] = true;
      if (consistent(k)) self(self, k + 1);
      used[t] = false;
      sigma[k].reset();
    }
  };
  recurse(recurse, 0);

  if (found) {
    out.status = WeakEquivalenceSearch::Status::Certificate;
    out.reason = "component-preserving isomorphism found";
    return out;
  }
  if (!any_sigma) return none("no support bijection respects pair sets and products");
  if (complete) return none("no component-preserving isomorphism exists");
  out.status = WeakEquivalenceSearch::Status::Unknown;
  out.reason = "outside the exhaustive search envelope";
  return out;
}

}  // namespace gradalg
