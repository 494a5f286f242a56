#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gradalg {

/// A finite group given by its multiplication table over indices 0..n-1.
class FiniteGroup {
 public:
  /// Validates the table (closure, associativity, identity, inverses) and
  /// throws InputError naming the first failure.
  FiniteGroup(std::size_t order, std::vector<std::size_t> table, std::size_t identity,
              std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t pow(std::size_t a, long n) const;
  std::size_t element_order(std::size_t a) const;
  const std::string& label(std::size_t a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(const std::string& label) const;
  const std::vector<std::size_t>& table() const { return table_; }

  bool is_abelian() const;
  /// Greedy generating set: repeatedly adds the smallest element outside the
  /// subgroup generated so far.
  std::vector<std::size_t> generators() const;
  /// Elements of the subgroup generated by `gens`, sorted.
  std::vector<std::size_t> closure(const std::vector<std::size_t>& gens) const;
  std::vector<std::size_t> commutator_subgroup() const;
  /// Order and exponent of G / [G, G].
  std::size_t abelianization_order() const;
  std::size_t abelianization_exponent() const;

  /// Same table and identity (labels are cosmetic).
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.identity_ == b.identity_ && a.table_ == b.table_;
  }

 private:
  std::size_t order_;
  std::vector<std::size_t> table_;
  std::size_t identity_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> inverse_;
};

struct GroupTableCheck {
  bool ok = true;
  std::string message;
};

/// Table-level check of the group axioms.
GroupTableCheck group_check(std::size_t order, const std::vector<std::size_t>& table,
                            std::size_t identity);

/// Z/n with elements 0..n-1 labelled by residue.
FiniteGroup make_cyclic(std::size_t n);
/// Direct product; element (g, h) has index g * |H| + h.
FiniteGroup make_product(const FiniteGroup& g, const FiniteGroup& h);
/// S_n for n <= 4: permutations in lexicographic order of their image
/// tuples, labelled in cycle notation; (s*t)(x) = s(t(x)).
FiniteGroup make_symmetric(std::size_t n);
/// Dihedral group of order 2n: r^i s^j at index i + n*j.
FiniteGroup make_dihedral(std::size_t n);

/// Every homomorphism G -> H as an image table indexed by elements of G,
/// found by backtracking over images of G's generating set. Throws
/// BudgetExceeded when |G| > max_domain_order.
std::vector<std::vector<std::size_t>> enumerate_hom_tables(const FiniteGroup& g,
                                                           const FiniteGroup& h,
                                                           std::size_t max_domain_order = 24);

}  // namespace gradalg
