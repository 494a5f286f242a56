#pragma once

#include "gradalg/finite_group.hpp"
#include "gradalg/word.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gradalg {

/// Canonical encoding of an element of some Group. Finite groups use {index},
/// free abelian groups the coordinate vector, free groups the reduced word's
/// letters. The encoding is only meaningful together with its Group.
struct GroupElement {
  std::vector<std::int64_t> code;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& e) const;
};

/// A grading group: a finite table group, Z^k, or the free group F_k.
class Group {
 public:
  enum class Kind { Finite, FreeAbelian, Free };

  Group();  // trivial group
  explicit Group(FiniteGroup g);
  static Group finite(FiniteGroup g) { return Group(std::move(g)); }
  static Group free_abelian(std::size_t rank);
  static Group free(std::size_t rank, std::vector<std::string> labels = {});
  static Group trivial() { return Group(); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  /// Rank for free and free abelian groups.
  std::size_t rank() const { return rank_; }
  /// The table group; throws Unsupported for infinite groups.
  const FiniteGroup& table() const;
  std::optional<std::size_t> order() const;
  /// Generator labels of a free group.
  const std::vector<std::string>& generator_labels() const { return labels_; }

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, long n) const;
  bool is_identity(const GroupElement& a) const { return a == identity(); }
  /// Throws InputError unless `a` is a valid encoding for this group.
  void validate(const GroupElement& a) const;
  bool contains(const GroupElement& a) const;

  /// The i-th standard generator (finite: the element with index i).
  GroupElement element(std::size_t index) const;
  GroupElement from_vector(const std::vector<long>& coords) const;
  GroupElement from_word(const Word& w) const;
  Word to_word(const GroupElement& a) const;
  std::size_t index(const GroupElement& a) const;  // finite only
  /// All elements in index order (finite only).
  std::vector<GroupElement> elements() const;

  /// Finite: label; free abelian: "3" for rank 1, "(1,-2)" otherwise;
  /// free: word string.
  std::string format(const GroupElement& a) const;
  GroupElement parse(const std::string& text) const;

  /// Structural equality; element labels are ignored.
  friend bool operator==(const Group& a, const Group& b);

 private:
  Kind kind_ = Kind::Finite;
  std::size_t rank_ = 0;
  std::shared_ptr<const FiniteGroup> finite_;
  std::vector<std::string> labels_;
};

/// A group homomorphism. For a finite domain the image of every element is
/// stored; otherwise the images of the standard generators.
class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(Group domain, Group codomain, std::vector<GroupElement> images);

  static GroupHom identity(const Group& g);
  /// Determined by generator images (free and free abelian domains) or by
  /// images of a generating set of a finite domain. Throws InputError when
  /// the assignment does not extend to a homomorphism.
  static GroupHom from_generators(const Group& domain, const Group& codomain,
                                  const std::vector<GroupElement>& generators,
                                  const std::vector<GroupElement>& images);

  const Group& domain() const { return domain_; }
  const Group& codomain() const { return codomain_; }
  const std::vector<GroupElement>& images() const { return images_; }

  GroupElement apply(const GroupElement& a) const;
  /// Table check (finite domain), commuting images (free abelian domain),
  /// always true for a free domain.
  bool is_homomorphism() const;
  bool is_injective() const;  // finite domain only
  bool is_bijective() const;  // finite domain and codomain only

  friend bool operator==(const GroupHom& a, const GroupHom& b) = default;

 private:
  Group domain_;
  Group codomain_;
  std::vector<GroupElement> images_;
};

GroupHom compose(const GroupHom& second, const GroupHom& first);

/// All homomorphisms between finite groups (see enumerate_hom_tables).
std::vector<GroupHom> enumerate_homs(const Group& g, const Group& h,
                                     std::size_t max_domain_order = 24);

}  // namespace gradalg
