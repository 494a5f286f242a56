#include "gradalg/hom_search.hpp"

#include "gradalg/error.hpp"

#include <map>

namespace gradalg {

namespace {

class Search {
 public:
  Search(const AlgebraPtr& a, const AlgebraPtr& b, const HomSearchOptions& options)
      : a_(a), b_(b), opt_(options), comps_(a->components()), b_comps_(b->components()) {
    const Field f = a->field();
    pool_ = opt_.coefficients;
    if (pool_.empty()) {
      if (f.is_finite())
        pool_ = f.elements();
      else
        pool_ = {Scalar::zero(f), Scalar::one(f), -Scalar::one(f)};
    }
    std::map<GroupElement, std::size_t> level_of;
    for (std::size_t l = 0; l < comps_.size(); ++l) level_of[comps_[l].first] = l;

    checks_.resize(comps_.size());
    for (std::size_t p = 0; p < comps_.size(); ++p)
      for (std::size_t q = 0; q < comps_.size(); ++q) {
        std::size_t ready = std::max(p, q);
        bool nonzero = false;
        for (auto i : comps_[p].second)
          for (auto j : comps_[q].second) nonzero = nonzero || !is_zero(a->product(i, j));
        if (nonzero) {
          auto pq = a->group().multiply(comps_[p].first, comps_[q].first);
          auto it = level_of.find(pq);
          if (it != level_of.end()) ready = std::max(ready, it->second);
        }
        checks_[ready].emplace_back(p, q);
      }
    if (a->unit()) {
      auto it = level_of.find(a->group().identity());
      unit_level_ = it == level_of.end() ? 0 : it->second;
    }
    images_.assign(a->dim(), b->zero());
  }

  HomSearchResult run() {
    if (opt_.unital && (!a_->unit() || !b_->unit())) return {};
    if (a_->dim() == 0) {
      emit();
      return std::move(result_);
    }
    recurse(0);
    return std::move(result_);
  }

 private:
  bool stop() const {
    return (opt_.limit && result_.homs.size() >= opt_.limit) ||
           (opt_.node_budget && nodes_ >= opt_.node_budget);
  }

  void emit() {
    Matrix m(a_->field(), b_->dim(), a_->dim());
    for (std::size_t i = 0; i < a_->dim(); ++i) m.set_column(i, images_[i]);
    result_.homs.push_back(GradedMorphism::analyze(a_, b_, std::move(m)));
  }

  bool consistent(std::size_t level) const {
    for (const auto& [p, q] : checks_[level])
      for (auto i : comps_[p].second)
        for (auto j : comps_[q].second) {
          const Vector& prod = a_->product(i, j);
          Vector lhs = b_->zero();
          for (std::size_t k = 0; k < prod.size(); ++k)
            if (!prod[k].is_zero()) lhs = lhs + prod[k] * images_[k];
          if (lhs != b_->multiply(images_[i], images_[j])) return false;
        }
    if (opt_.unital && level == unit_level_) {
      Vector image = b_->zero();
      const Vector& u = *a_->unit();
      for (std::size_t k = 0; k < u.size(); ++k)
        if (!u[k].is_zero()) image = image + u[k] * images_[k];
      if (image != *b_->unit()) return false;
    }
    return true;
  }

  void recurse(std::size_t level) {
    if (stop()) {
      result_.complete = false;
      return;
    }
    if (level == comps_.size()) {
      emit();
      return;
    }
    const auto& [g, cols] = comps_[level];
    std::optional<GroupElement> forced;
    if (opt_.forced_target) forced = opt_.forced_target(g);

    const bool invertible = opt_.blocks == HomSearchOptions::Blocks::Invertible;
    if (opt_.allow_zero_components && !invertible) {
      for (auto i : cols) images_[i] = b_->zero();
      ++nodes_;
      if (consistent(level)) recurse(level + 1);
    }
    for (const auto& [h, rows] : b_comps_) {
      if (forced && *forced != h) continue;
      if (invertible && rows.size() != cols.size()) continue;
      try_blocks(level, cols, rows);
      if (stop()) {
        result_.complete = false;
        return;
      }
    }
    for (auto i : cols) images_[i] = b_->zero();
  }

  void try_blocks(std::size_t level, const std::vector<std::size_t>& cols,
                  const std::vector<std::size_t>& rows) {
    const Field f = a_->field();
    const std::size_t entries = rows.size() * cols.size();
    std::vector<std::size_t> digits(entries, 0);
    for (bool first = true;; first = false) {
      if (!first) {
        std::size_t pos = 0;
        while (pos < entries && ++digits[pos] == pool_.size()) digits[pos++] = 0;
        if (pos == entries) return;
      }

      Matrix block(f, rows.size(), cols.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) block.set(r, c, pool_[digits[r * cols.size() + c]]);
      if (block.is_zero()) continue;
      if (opt_.blocks != HomSearchOptions::Blocks::Any && rank(block) != cols.size()) continue;

      for (std::size_t c = 0; c < cols.size(); ++c) {
        Vector v = b_->zero();
        for (std::size_t r = 0; r < rows.size(); ++r) v[rows[r]] = block(r, c);
        images_[cols[c]] = std::move(v);
      }
      ++nodes_;
      if (consistent(level)) recurse(level + 1);
      if (stop()) return;
    }
  }

  AlgebraPtr a_, b_;
  HomSearchOptions opt_;
  std::vector<std::pair<GroupElement, std::vector<std::size_t>>> comps_;
  std::vector<std::pair<GroupElement, std::vector<std::size_t>>> b_comps_;
  std::vector<Scalar> pool_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checks_;
  std::size_t unit_level_ = 0;
  std::vector<Vector> images_;
  std::size_t nodes_ = 0;
  HomSearchResult result_;
};

}  // namespace

HomSearchResult enumerate_graded_homs(const AlgebraPtr& a, const AlgebraPtr& b,
                                      const HomSearchOptions& options) {
  if (!a || !b) throw InputError("hom search needs two algebras");
  if (a->field() != b->field()) throw InputError("hom search needs a common field");
  return Search(a, b, options).run();
}

}  // namespace gradalg
