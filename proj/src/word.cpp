#include "gradalg/word.hpp"

#include "gradalg/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace gradalg {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

}  // namespace

Word::Word(std::vector<int> letters) {
  for (int l : letters) {
    if (l == 0) throw InputError("word letter 0 is not a generator");
    push_reduced(letters_, l);
  }
}

Word Word::generator(std::size_t index, int exponent) {
  std::vector<int> letters;
  int l = static_cast<int>(index) + 1;
  for (int i = 0; i < std::abs(exponent); ++i) letters.push_back(exponent < 0 ? -l : l);
  return Word(std::move(letters));
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

std::size_t Word::generator_bound() const {
  std::size_t bound = 0;
  for (int l : letters_) bound = std::max(bound, static_cast<std::size_t>(std::abs(l)));
  return bound;
}

std::size_t Word::occurrences(std::size_t index) const {
  int target = static_cast<int>(index) + 1;
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [&](int l) { return std::abs(l) == target; }));
}

long Word::exponent_sum(std::size_t index) const {
  int target = static_cast<int>(index) + 1;
  long sum = 0;
  for (int l : letters_) {
    if (l == target) ++sum;
    if (l == -target) --sum;
  }
  return sum;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  for (int l : b.letters_) push_reduced(w.letters_, l);
  return w;
}

std::string default_generator_label(std::size_t index) { return "g" + std::to_string(index + 1); }

std::string Word::to_string(const std::vector<std::string>& labels) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    int l = letters_[i];
    std::size_t idx = static_cast<std::size_t>(std::abs(l)) - 1;
    if (i) out += ' ';
    out += idx < labels.size() ? labels[idx] : default_generator_label(idx);
    if (l < 0) out += "^-1";
  }
  return out;
}

Word Word::parse(const std::string& text, const std::vector<std::string>& labels) {
  std::istringstream in(text);
  std::string token;
  std::vector<int> letters;
  while (in >> token) {
    if (token == "1") continue;
    int sign = 1;
    if (token.size() > 3 && token.ends_with("^-1")) {
      sign = -1;
      token.resize(token.size() - 3);
    }
    auto it = std::find(labels.begin(), labels.end(), token);
    if (it == labels.end()) throw InputError("unknown generator '" + token + "' in word '" + text + "'");
    letters.push_back(sign * (static_cast<int>(it - labels.begin()) + 1));
  }
  return Word(std::move(letters));
}

Word cyclically_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t i = 0, j = l.size();
  while (j - i >= 2 && l[i] == -l[j - 1]) {
    ++i;
    --j;
  }
  return Word(std::vector<int>(l.begin() + static_cast<long>(i), l.begin() + static_cast<long>(j)));
}

Word canonical_relator(const Word& w) {
  Word r = cyclically_reduce(w);
  if (r.empty()) return r;
  Word best = r;
  for (const Word& base : {r, r.inverse()}) {
    std::vector<int> letters = base.letters();
    for (std::size_t k = 0; k < letters.size(); ++k) {
      std::rotate(letters.begin(), letters.begin() + 1, letters.end());
      Word candidate(letters);
      if (candidate < best) best = candidate;
    }
  }
  return best;
}

Word substitute(const Word& w, std::size_t index, const Word& image) {
  const int target = static_cast<int>(index) + 1;
  const Word inv = image.inverse();
  Word out;
  for (int l : w.letters()) {
    if (l == target)
      out = out * image;
    else if (l == -target)
      out = out * inv;
    else
      out = out * Word({l});
  }
  return out;
}

}  // namespace gradalg
