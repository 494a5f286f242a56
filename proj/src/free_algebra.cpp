#include "gradalg/free_algebra.hpp"

#include "gradalg/error.hpp"

#include <map>

namespace gradalg {

FreeGradedAlgebra FreeGradedAlgebra::one_variable(bool unital, std::optional<std::size_t> truncation) {
  Group z = Group::free_abelian(1);
  return FreeGradedAlgebra{z, {"x"}, {z.element(0)}, unital, truncation};
}

GroupElement FreeGradedAlgebra::word_degree(const FreeWord& w) const {
  GroupElement d = group.identity();
  for (auto i : w) d = group.multiply(d, degrees.at(i));
  return d;
}

bool FreeGradedAlgebra::vanishes(const FreeWord& w) const {
  if (w.empty()) return !unital;
  return truncation && w.size() >= *truncation;
}

std::string FreeGradedAlgebra::format(const FreeWord& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (auto i : w) out += generators.at(i);
  return out;
}

std::vector<FreeWord> words_up_to(std::size_t generators, std::size_t max_len, std::size_t min_len) {
  std::vector<FreeWord> out;
  std::vector<FreeWord> layer{FreeWord{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len >= min_len) out.insert(out.end(), layer.begin(), layer.end());
    if (len == max_len || generators == 0) break;
    std::vector<FreeWord> next;
    for (const auto& w : layer)
      for (std::size_t g = 0; g < generators; ++g) {
        FreeWord v = w;
        v.push_back(g);
        next.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  return out;
}

FreeMorphism::FreeMorphism(FreeGradedAlgebra source, AlgebraPtr target, std::vector<Vector> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!target_) throw InputError("free morphism needs a target algebra");
  if (source_.degrees.size() != source_.generators.size())
    throw InputError("free algebra generator/degree count mismatch");
  if (images_.size() != source_.generators.size())
    throw InputError("free morphism needs one image per generator");
  for (const auto& v : images_)
    if (v.size() != target_->dim()) throw InputError("free morphism image has the wrong length");
  if (source_.unital && !target_->is_unital())
    throw InputError("unital free algebra needs a unital target");
}

Vector FreeMorphism::evaluate(const FreeWord& w) const {
  if (source_.vanishes(w)) return target_->zero();
  if (w.empty()) return *target_->unit();
  Vector out = images_.at(w.front());
  for (std::size_t i = 1; i < w.size(); ++i) out = target_->multiply(out, images_.at(w[i]));
  return out;
}

bool FreeMorphism::well_defined() const {
  if (!source_.truncation) return true;
  const std::size_t k = *source_.truncation;
  if (k == 0) {
    for (const auto& v : images_)
      if (!is_zero(v)) return false;
    return !source_.unital;
  }
  for (const auto& w : words_up_to(source_.generators.size(), k, k)) {
    Vector out = images_.at(w.front());
    for (std::size_t i = 1; i < w.size(); ++i) out = target_->multiply(out, images_.at(w[i]));
    if (!is_zero(out)) return false;
  }
  return true;
}

bool FreeMorphism::is_graded_up_to(std::size_t max_len) const {
  std::map<GroupElement, GroupElement> psi;
  for (const auto& w : words_up_to(source_.generators.size(), max_len, source_.unital ? 0 : 1)) {
    Vector v = evaluate(w);
    if (is_zero(v)) continue;
    auto deg = target_->homogeneous_degree(v);
    if (!deg) return false;
    auto [it, inserted] = psi.emplace(source_.word_degree(w), *deg);
    if (!inserted && it->second != *deg) return false;
  }
  return true;
}

bool FreeMorphism::is_graded_injective_up_to(std::size_t max_len) const {
  std::map<GroupElement, std::vector<Vector>> by_degree;
  for (const auto& w : words_up_to(source_.generators.size(), max_len, source_.unital ? 0 : 1)) {
    if (source_.vanishes(w)) continue;
    by_degree[source_.word_degree(w)].push_back(evaluate(w));
  }
  for (const auto& [deg, images] : by_degree)
    if (Subspace::span(target_->field(), target_->dim(), images).dim() != images.size()) return false;
  return true;
}

bool operator==(const FreeMorphism& a, const FreeMorphism& b) {
  return a.source_ == b.source_ && *a.target_ == *b.target_ && a.images_ == b.images_;
}

FreeMorphism free_extend(const PointedGradedSet& x, AlgebraPtr a, std::vector<Vector> assignment) {
  if (!a) throw InputError("free_extend needs a target algebra");
  if (!(x.group == a->group())) throw InputError("pointed set and algebra use different groups");
  if (x.labels.size() != x.degrees.size()) throw InputError("pointed set label/degree mismatch");
  if (assignment.size() != x.labels.size()) throw InputError("assignment needs one vector per element");
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i].size() != a->dim()) throw InputError("assigned vector has the wrong length");
    if (is_zero(assignment[i])) continue;
    auto deg = a->homogeneous_degree(assignment[i]);
    if (!deg || *deg != x.degrees[i])
      throw InputError("assignment of " + x.labels[i] + " is not in the component of its degree");
  }
  FreeGradedAlgebra source{x.group, x.labels, x.degrees, false, std::nullopt};
  return FreeMorphism(std::move(source), std::move(a), std::move(assignment));
}

}  // namespace gradalg
