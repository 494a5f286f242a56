#pragma once

#include "gradalg/group.hpp"
#include "gradalg/matrix.hpp"
#include "gradalg/scalar.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace gradalg {

using SupportSet = std::set<GroupElement>;
using PairSet = std::set<std::pair<GroupElement, GroupElement>>;

/// Finite-dimensional associative algebra with a homogeneous basis. The
/// product of basis vectors i and j is stored as a dense coefficient vector.
/// Construction only checks shapes; verify_grading checks the axioms.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  GradedAlgebra(Field field, Group group, std::vector<std::string> labels,
                std::vector<GroupElement> degrees, std::vector<Vector> products,
                std::optional<Vector> unit = std::nullopt);

  Field field() const { return field_; }
  const Group& group() const { return group_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;  // throws InputError
  const std::vector<GroupElement>& degrees() const { return degrees_; }
  const GroupElement& degree(std::size_t i) const { return degrees_.at(i); }
  const std::optional<Vector>& unit() const { return unit_; }
  bool is_unital() const { return unit_.has_value(); }

  /// e_i * e_j.
  const Vector& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  Vector multiply(const Vector& a, const Vector& b) const;
  /// a^k for k >= 1.
  Vector power(const Vector& a, std::size_t k) const;
  Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim(), i); }
  Vector zero() const { return zero_vector(field_, dim()); }
  /// Element from a label -> coefficient list.
  Vector element(const std::vector<std::pair<std::string, long>>& terms) const;

  /// Basis indices of degree g.
  std::vector<std::size_t> component_indices(const GroupElement& g) const;
  Subspace component(const GroupElement& g) const;
  /// Degree of a nonzero homogeneous vector; nullopt if zero or mixed.
  std::optional<GroupElement> homogeneous_degree(const Vector& v) const;

  SupportSet support() const;
  PairSet pair_set() const;
  /// Basis indices grouped by degree, in support order.
  std::vector<std::pair<GroupElement, std::vector<std::size_t>>> components() const;

  std::string format(const Vector& v) const;

  /// Same field, group, degrees, structure constants and unit. Labels are
  /// not compared.
  friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b);

 private:
  Field field_;
  Group group_;
  std::vector<std::string> labels_;
  std::vector<GroupElement> degrees_;
  std::vector<Vector> products_;
  std::optional<Vector> unit_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

struct GradingCheck {
  bool ok = true;
  std::string message;
  /// Offending basis triple (i, j, k) when one exists.
  std::optional<std::array<std::size_t, 3>> triple;
};

/// Checks degree validity, that every nonzero structure constant respects
/// degrees, associativity on all basis triples, and the unit axioms.
GradingCheck verify_grading(const GradedAlgebra& a);

/// Incremental construction by labels. Unset products are zero.
class AlgebraBuilder {
 public:
  AlgebraBuilder(Field field, Group group);

  /// Adds a basis vector and returns its index.
  std::size_t add(const std::string& label, const GroupElement& degree);
  /// e_i * e_j = sum of coeff * e_k.
  AlgebraBuilder& set(const std::string& i, const std::string& j,
                      const std::vector<std::pair<std::string, long>>& terms);
  AlgebraBuilder& set(std::size_t i, std::size_t j, const Vector& value);
  /// Declares `label` to be a two-sided unit: e * x = x * e = x.
  AlgebraBuilder& unit(const std::string& label);
  AlgebraBuilder& unit_element(const Vector& v);

  /// Validates with verify_grading and throws InputError on failure.
  GradedAlgebra build() const;
  GradedAlgebra build_unchecked() const;

 private:
  Field field_;
  Group group_;
  std::vector<std::string> labels_;
  std::vector<GroupElement> degrees_;
  std::vector<std::tuple<std::size_t, std::size_t, std::vector<std::pair<std::size_t, Scalar>>>>
      entries_;
  std::optional<std::string> unit_label_;
  std::optional<Vector> unit_vector_;
};

}  // namespace gradalg
