#include "gradalg/presentation.hpp"

#include "gradalg/error.hpp"
#include "gradalg/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace gradalg {

namespace {

std::vector<Word> normalize_relators(std::vector<Word> relators) {
  std::vector<Word> out;
  for (auto& r : relators) {
    Word c = cyclically_reduce(r);
    if (!c.empty()) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

PresentedGroup::PresentedGroup(std::vector<std::string> generator_labels, std::vector<Word> relators)
    : labels_(std::move(generator_labels)), relators_(normalize_relators(std::move(relators))) {
  for (const auto& r : relators_)
    if (r.generator_bound() > labels_.size())
      throw InputError("relator mentions a generator outside the presentation");
}

PresentedGroup::PresentedGroup(std::size_t generators, std::vector<Word> relators)
    : PresentedGroup(
          [&] {
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < generators; ++i) labels.push_back(default_generator_label(i));
            return labels;
          }(),
          std::move(relators)) {}

std::string PresentedGroup::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < labels_.size(); ++i) out += (i ? ", " : "") + labels_[i];
  out += " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i)
    out += (i ? ", " : "") + relators_[i].to_string(labels_);
  return out + ">";
}

std::string Abelianization::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < free_rank; ++i) out += out.empty() ? "Z" : " x Z";
  for (long t : torsion) out += (out.empty() ? "Z/" : " x Z/") + std::to_string(t);
  return out.empty() ? "1" : out;
}

Abelianization abelianization(const PresentedGroup& p) {
  const std::size_t n = p.generator_count();
  IntMatrix m(p.relators().size(), n);
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (std::size_t g = 0; g < n; ++g) m(r, g) = p.relators()[r].exponent_sum(g);
  auto snf = smith_normal_form(m);
  Abelianization out;
  out.free_rank = n - snf.diagonal.size();
  for (const auto& d : snf.diagonal)
    if (d > 1) out.torsion.push_back(d.get_si());
  return out;
}

TietzeResult tietze_simplify(const PresentedGroup& p, std::size_t budget) {
  std::vector<std::string> labels = p.generator_labels();
  std::vector<Word> relators = p.relators();
  std::size_t eliminations = 0;

  for (;;) {
    // Reduce and deduplicate up to rotation/inversion, keeping first occurrences.
    std::vector<Word> kept;
    std::vector<Word> seen;
    for (const auto& r : relators) {
      Word c = cyclically_reduce(r);
      if (c.empty()) continue;
      Word key = canonical_relator(c);
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      kept.push_back(c);
    }
    relators = std::move(kept);

    std::optional<std::pair<std::size_t, std::size_t>> choice;  // (generator, relator)
    for (std::size_t g = 0; g < labels.size() && !choice; ++g)
      for (std::size_t r = 0; r < relators.size(); ++r)
        if (relators[r].occurrences(g) == 1 &&
            (!choice || relators[r].length() < relators[choice->second].length()))
          choice = {g, r};
    if (!choice) break;
    if (eliminations == budget) return {PresentedGroup(labels, relators), true};
    ++eliminations;

    const auto [g, r] = *choice;
    // Rotate the relator so the single occurrence of g comes first:
    // g^e v = 1, hence g = v^-e.
    std::vector<int> letters = relators[r].letters();
    const int target = static_cast<int>(g) + 1;
    auto pos = std::find_if(letters.begin(), letters.end(),
                            [&](int l) { return std::abs(l) == target; });
    std::rotate(letters.begin(), pos, letters.end());
    const int sign = letters.front() > 0 ? 1 : -1;
    Word rest(std::vector<int>(letters.begin() + 1, letters.end()));
    Word image = sign > 0 ? rest.inverse() : rest;

    std::vector<Word> next;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (i == r) continue;
      Word w = substitute(relators[i], g, image);
      // Close the gap left by g in the generator numbering.
      std::vector<int> renumbered;
      for (int l : w.letters()) {
        int a = std::abs(l);
        renumbered.push_back(a > target ? (l > 0 ? l - 1 : l + 1) : l);
      }
      next.emplace_back(std::move(renumbered));
    }
    relators = std::move(next);
    labels.erase(labels.begin() + static_cast<long>(g));
  }
  return {PresentedGroup(labels, relators), false};
}

namespace {

constexpr long kUndefined = -1;

class CosetTable {
 public:
  CosetTable(std::size_t generators, std::size_t max_cosets)
      : columns_(2 * generators), max_cosets_(max_cosets) {
    add_row();
  }

  // Column of generator i is 2i, of its inverse 2i + 1.
  static std::size_t column(int letter) {
    std::size_t g = static_cast<std::size_t>(std::abs(letter)) - 1;
    return 2 * g + (letter < 0 ? 1 : 0);
  }
  static std::size_t inverse_column(std::size_t x) { return x ^ 1u; }

  bool overflow() const { return overflow_; }
  std::size_t size() const { return parent_.size(); }
  bool live(std::size_t c) const { return parent_[c] == static_cast<long>(c); }
  long& at(std::size_t c, std::size_t x) { return table_[c * columns_ + x]; }

  void define(std::size_t c, std::size_t x) {
    if (parent_.size() >= max_cosets_) {
      overflow_ = true;
      return;
    }
    std::size_t d = add_row();
    at(c, x) = static_cast<long>(d);
    at(d, inverse_column(x)) = static_cast<long>(c);
  }

  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    std::size_t f = c, b = c;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) != kUndefined) f = static_cast<std::size_t>(at(f, w[i++]));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inverse_column(w[j])) != kUndefined)
        b = static_cast<std::size_t>(at(b, inverse_column(w[j--])));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = static_cast<long>(b);
        at(b, inverse_column(w[i])) = static_cast<long>(f);
        return;
      }
      define(f, w[i]);
      if (overflow_) return;
    }
  }

  void fill_row(std::size_t c) {
    for (std::size_t x = 0; x < columns_ && !overflow_; ++x)
      if (live(c) && at(c, x) == kUndefined) define(c, x);
  }

  std::size_t columns() const { return columns_; }

 private:
  std::size_t add_row() {
    std::size_t d = parent_.size();
    parent_.push_back(static_cast<long>(d));
    table_.resize(table_.size() + columns_, kUndefined);
    return d;
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != static_cast<long>(r)) r = static_cast<std::size_t>(parent_[r]);
    while (parent_[c] != static_cast<long>(r)) {
      std::size_t next = static_cast<std::size_t>(parent_[c]);
      parent_[c] = static_cast<long>(r);
      c = next;
    }
    return r;
  }

  void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = static_cast<long>(a);
    queue.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::size_t e = queue[q];
      for (std::size_t x = 0; x < columns_; ++x) {
        if (at(e, x) == kUndefined) continue;
        std::size_t f = static_cast<std::size_t>(at(e, x));
        std::size_t xi = inverse_column(x);
        if (at(f, xi) == static_cast<long>(e)) at(f, xi) = kUndefined;
        std::size_t e1 = rep(e), f1 = rep(f);
        if (at(e1, x) != kUndefined) {
          merge(f1, static_cast<std::size_t>(at(e1, x)), queue);
        } else if (at(f1, xi) != kUndefined) {
          merge(e1, static_cast<std::size_t>(at(f1, xi)), queue);
        } else {
          at(e1, x) = static_cast<long>(f1);
          at(f1, xi) = static_cast<long>(e1);
        }
      }
    }
  }

  std::size_t columns_;
  std::size_t max_cosets_;
  bool overflow_ = false;
  std::vector<long> parent_;
  std::vector<long> table_;
};

}  // namespace

std::optional<CosetEnumeration> todd_coxeter(const PresentedGroup& p, std::size_t max_cosets) {
  if (max_cosets < 1) throw InputError("max_cosets must be at least 1");
  const std::size_t n = p.generator_count();
  if (n == 0) return CosetEnumeration{1, {}, {Word()}};

  std::vector<std::vector<std::size_t>> relators;
  for (const auto& r : p.relators()) {
    std::vector<std::size_t> cols;
    for (int l : r.letters()) cols.push_back(CosetTable::column(l));
    relators.push_back(std::move(cols));
  }

  CosetTable t(n, max_cosets);
  for (std::size_t c = 0; c < t.size(); ++c) {
    for (const auto& r : relators) {
      if (!t.live(c)) break;
      t.scan_and_fill(c, r);
      if (t.overflow()) return std::nullopt;
    }
    if (t.live(c)) t.fill_row(c);
    if (t.overflow()) return std::nullopt;
  }

  // Renumber live cosets in increasing order.
  std::vector<long> number(t.size(), -1);
  std::size_t order = 0;
  for (std::size_t c = 0; c < t.size(); ++c)
    if (t.live(c)) number[c] = static_cast<long>(order++);

  CosetEnumeration out;
  out.order = order;
  out.generator_perms.assign(n, std::vector<std::size_t>(order));
  for (std::size_t c = 0; c < t.size(); ++c) {
    if (!t.live(c)) continue;
    for (std::size_t g = 0; g < n; ++g)
      out.generator_perms[g][static_cast<std::size_t>(number[c])] =
          static_cast<std::size_t>(number[static_cast<std::size_t>(t.at(c, 2 * g))]);
  }

  // Breadth-first representatives from coset 0.
  out.coset_reps.assign(order, Word());
  std::vector<bool> reached(order, false);
  std::vector<std::size_t> queue{0};
  reached[0] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::size_t c = queue[q];
    for (std::size_t g = 0; g < n; ++g)
      for (int sign : {1, -1}) {
        std::size_t d = sign > 0 ? out.generator_perms[g][c] : 0;
        if (sign < 0) {
          auto& perm = out.generator_perms[g];
          d = static_cast<std::size_t>(std::find(perm.begin(), perm.end(), c) - perm.begin());
        }
        if (reached[d]) continue;
        reached[d] = true;
        out.coset_reps[d] = out.coset_reps[c] * Word::generator(g, sign);
        queue.push_back(d);
      }
  }
  return out;
}

std::vector<std::size_t> act(const CosetEnumeration& e, const Word& w) {
  std::vector<std::size_t> perm(e.order);
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : w.letters()) {
    const auto& g = e.generator_perms[static_cast<std::size_t>(std::abs(l)) - 1];
    for (auto& c : perm) {
      if (l > 0)
        c = g[c];
      else
        c = static_cast<std::size_t>(std::find(g.begin(), g.end(), c) - g.begin());
    }
  }
  return perm;
}

std::string Identification::verdict() const {
  switch (kind) {
    case Kind::Trivial:
      return "trivial";
    case Kind::Free:
      return "free of rank " + std::to_string(rank);
    case Kind::Finite:
      return "finite of order " + std::to_string(order);
    case Kind::Unknown:
      return "unknown";
  }
  return "unknown";
}

Identification identify(const PresentedGroup& p, std::size_t max_cosets, std::size_t tietze_budget) {
  Identification out;
  out.simplified = tietze_simplify(p, tietze_budget).presentation;
  if (out.simplified.generator_count() == 0) {
    out.kind = Identification::Kind::Trivial;
    out.order = 1;
    return out;
  }
  if (out.simplified.relators().empty()) {
    out.kind = Identification::Kind::Free;
    out.rank = out.simplified.generator_count();
    return out;
  }
  out.enumeration = todd_coxeter(out.simplified, max_cosets);
  if (!out.enumeration) return out;
  out.order = out.enumeration->order;
  out.kind = out.order == 1 ? Identification::Kind::Trivial : Identification::Kind::Finite;
  return out;
}

namespace {

std::vector<Word> canonical_multiset(const std::vector<Word>& relators) {
  std::vector<Word> out;
  for (const auto& r : relators) out.push_back(canonical_relator(r));
  std::sort(out.begin(), out.end());
  return out;
}

Word relabel(const Word& w, const std::vector<std::size_t>& perm) {
  std::vector<int> letters;
  for (int l : w.letters()) {
    int image = static_cast<int>(perm[static_cast<std::size_t>(std::abs(l)) - 1]) + 1;
    letters.push_back(l > 0 ? image : -image);
  }
  return Word(std::move(letters));
}

}  // namespace

bool equal_under_relabeling(const PresentedGroup& a, const PresentedGroup& b,
                            const std::vector<std::size_t>& perm) {
  if (a.generator_count() != b.generator_count() || perm.size() != a.generator_count()) return false;
  std::vector<Word> mapped;
  for (const auto& r : a.relators()) mapped.push_back(relabel(r, perm));
  return canonical_multiset(mapped) == canonical_multiset(b.relators());
}

std::optional<std::vector<std::size_t>> find_relabeling(const PresentedGroup& a,
                                                        const PresentedGroup& b) {
  const std::size_t n = a.generator_count();
  if (n != b.generator_count() || a.relators().size() != b.relators().size()) return std::nullopt;
  if (n > 8) throw BudgetExceeded("relabeling search is limited to 8 generators");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (equal_under_relabeling(a, b, perm)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace gradalg
