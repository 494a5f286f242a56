#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace gradalg {

/// Element of a free group as a freely reduced word. A letter is +(i+1) for
/// generator i and -(i+1) for its inverse.
class Word {
 public:
  Word() = default;
  /// Freely reduces the given letters. Throws InputError on a zero letter.
  explicit Word(std::vector<int> letters);

  static Word generator(std::size_t index, int exponent = 1);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  /// Number of generators needed to spell the word (max index + 1).
  std::size_t generator_bound() const;
  /// Occurrences of generator `index` with either sign.
  std::size_t occurrences(std::size_t index) const;
  /// Exponent sum of generator `index`.
  long exponent_sum(std::size_t index) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;
  friend auto operator<=>(const Word& a, const Word& b) = default;

  /// Space-separated letters, inverses written as `x^-1`; the empty word is
  /// rendered as "1". Labels default to g1, g2, ...
  std::string to_string(const std::vector<std::string>& labels = {}) const;
  /// Inverse of to_string; labels are matched exactly.
  static Word parse(const std::string& text, const std::vector<std::string>& labels);

 private:
  std::vector<int> letters_;
};

/// Conjugates away matching first/last letters.
Word cyclically_reduce(const Word& w);
/// Least word among all cyclic rotations of w and of its inverse, so two
/// relators defining the same normal closure generator compare equal.
Word canonical_relator(const Word& w);
/// Replaces every occurrence of generator `index` with `image` (and its
/// inverse with image^-1).
Word substitute(const Word& w, std::size_t index, const Word& image);

std::string default_generator_label(std::size_t index);

}  // namespace gradalg
