#include "gradalg/group.hpp"

#include "gradalg/error.hpp"

#include <algorithm>
#include <sstream>

namespace gradalg {

std::size_t GroupElementHash::operator()(const GroupElement& e) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto c : e.code) {
    h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Group::Group() : Group(make_cyclic(1)) {}

Group::Group(FiniteGroup g)
    : kind_(Kind::Finite), finite_(std::make_shared<const FiniteGroup>(std::move(g))) {}

Group Group::free_abelian(std::size_t rank) {
  Group g;
  g.kind_ = Kind::FreeAbelian;
  g.rank_ = rank;
  g.finite_.reset();
  return g;
}

Group Group::free(std::size_t rank, std::vector<std::string> labels) {
  Group g;
  g.kind_ = Kind::Free;
  g.rank_ = rank;
  g.finite_.reset();
  if (labels.empty())
    for (std::size_t i = 0; i < rank; ++i) labels.push_back(default_generator_label(i));
  if (labels.size() != rank) throw InputError("free group label count does not match rank");
  g.labels_ = std::move(labels);
  return g;
}

const FiniteGroup& Group::table() const {
  if (!finite_) throw Unsupported("group is infinite; no multiplication table");
  return *finite_;
}

std::optional<std::size_t> Group::order() const {
  if (kind_ == Kind::Finite) return finite_->order();
  if (rank_ == 0) return 1;
  return std::nullopt;
}

GroupElement Group::identity() const {
  switch (kind_) {
    case Kind::Finite:
      return {{static_cast<std::int64_t>(finite_->identity())}};
    case Kind::FreeAbelian:
      return {std::vector<std::int64_t>(rank_, 0)};
    case Kind::Free:
      return {};
  }
  return {};
}

bool Group::contains(const GroupElement& a) const {
  switch (kind_) {
    case Kind::Finite:
      return a.code.size() == 1 && a.code[0] >= 0 &&
             static_cast<std::size_t>(a.code[0]) < finite_->order();
    case Kind::FreeAbelian:
      return a.code.size() == rank_;
    case Kind::Free:
      for (std::size_t i = 0; i < a.code.size(); ++i) {
        auto l = a.code[i];
        if (l == 0 || static_cast<std::size_t>(l < 0 ? -l : l) > rank_) return false;
        if (i && a.code[i - 1] == -l) return false;
      }
      return true;
  }
  return false;
}

void Group::validate(const GroupElement& a) const {
  if (!contains(a)) throw InputError("element encoding does not belong to the grading group");
}

GroupElement Group::multiply(const GroupElement& a, const GroupElement& b) const {
  switch (kind_) {
    case Kind::Finite:
      return {{static_cast<std::int64_t>(finite_->mul(static_cast<std::size_t>(a.code[0]),
                                                       static_cast<std::size_t>(b.code[0])))}};
    case Kind::FreeAbelian: {
      GroupElement out = a;
      for (std::size_t i = 0; i < rank_; ++i) out.code[i] += b.code[i];
      return out;
    }
    case Kind::Free:
      return from_word(to_word(a) * to_word(b));
  }
  return {};
}

GroupElement Group::inverse(const GroupElement& a) const {
  switch (kind_) {
    case Kind::Finite:
      return {{static_cast<std::int64_t>(finite_->inv(static_cast<std::size_t>(a.code[0])))}};
    case Kind::FreeAbelian: {
      GroupElement out = a;
      for (auto& c : out.code) c = -c;
      return out;
    }
    case Kind::Free:
      return from_word(to_word(a).inverse());
  }
  return {};
}

GroupElement Group::power(const GroupElement& a, long n) const {
  GroupElement base = n < 0 ? inverse(a) : a;
  GroupElement out = identity();
  for (long i = 0; i < (n < 0 ? -n : n); ++i) out = multiply(out, base);
  return out;
}

GroupElement Group::element(std::size_t index) const {
  switch (kind_) {
    case Kind::Finite:
      if (index >= finite_->order()) throw InputError("group element index out of range");
      return {{static_cast<std::int64_t>(index)}};
    case Kind::FreeAbelian: {
      if (index >= rank_) throw InputError("generator index out of range");
      GroupElement e = identity();
      e.code[index] = 1;
      return e;
    }
    case Kind::Free:
      if (index >= rank_) throw InputError("generator index out of range");
      return from_word(Word::generator(index));
  }
  return {};
}

GroupElement Group::from_vector(const std::vector<long>& coords) const {
  if (kind_ != Kind::FreeAbelian || coords.size() != rank_)
    throw InputError("coordinate vector does not fit the grading group");
  return {std::vector<std::int64_t>(coords.begin(), coords.end())};
}

GroupElement Group::from_word(const Word& w) const {
  if (kind_ != Kind::Free || w.generator_bound() > rank_)
    throw InputError("word does not fit the grading group");
  return {std::vector<std::int64_t>(w.letters().begin(), w.letters().end())};
}

Word Group::to_word(const GroupElement& a) const {
  return Word(std::vector<int>(a.code.begin(), a.code.end()));
}

std::size_t Group::index(const GroupElement& a) const {
  validate(a);
  if (kind_ != Kind::Finite) throw Unsupported("element index requires a finite group");
  return static_cast<std::size_t>(a.code[0]);
}

std::vector<GroupElement> Group::elements() const {
  const auto& t = table();
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < t.order(); ++i) out.push_back({{static_cast<std::int64_t>(i)}});
  return out;
}

std::string Group::format(const GroupElement& a) const {
  validate(a);
  switch (kind_) {
    case Kind::Finite:
      return finite_->label(static_cast<std::size_t>(a.code[0]));
    case Kind::FreeAbelian: {
      if (rank_ == 1) return std::to_string(a.code[0]);
      std::string out = "(";
      for (std::size_t i = 0; i < rank_; ++i) out += (i ? "," : "") + std::to_string(a.code[i]);
      return out + ")";
    }
    case Kind::Free:
      return to_word(a).to_string(labels_);
  }
  return {};
}

GroupElement Group::parse(const std::string& text) const {
  switch (kind_) {
    case Kind::Finite: {
      if (auto i = finite_->find(text)) return element(*i);
      throw InputError("unknown group element '" + text + "'");
    }
    case Kind::FreeAbelian: {
      std::string body = text;
      if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
      std::replace(body.begin(), body.end(), ',', ' ');
      std::istringstream in(body);
      std::vector<long> coords;
      long v;
      while (in >> v) coords.push_back(v);
      if (!in.eof()) throw InputError("malformed free abelian element '" + text + "'");
      return from_vector(coords);
    }
    case Kind::Free:
      return from_word(Word::parse(text, labels_));
  }
  return {};
}

bool operator==(const Group& a, const Group& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == Group::Kind::Finite) return *a.finite_ == *b.finite_;
  return a.rank_ == b.rank_;
}

GroupHom::GroupHom(Group domain, Group codomain, std::vector<GroupElement> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  std::size_t expected = domain_.is_finite() ? domain_.table().order() : domain_.rank();
  if (images_.size() != expected) throw InputError("group hom has the wrong number of images");
  for (const auto& e : images_) codomain_.validate(e);
}

GroupHom GroupHom::identity(const Group& g) {
  std::vector<GroupElement> images;
  if (g.is_finite())
    images = g.elements();
  else
    for (std::size_t i = 0; i < g.rank(); ++i) images.push_back(g.element(i));
  return GroupHom(g, g, std::move(images));
}

GroupHom GroupHom::from_generators(const Group& domain, const Group& codomain,
                                   const std::vector<GroupElement>& generators,
                                   const std::vector<GroupElement>& images) {
  if (generators.size() != images.size()) throw InputError("generator/image count mismatch");
  if (!domain.is_finite()) {
    // Generators must be the standard ones, in order.
    std::vector<GroupElement> std_images(domain.rank(), codomain.identity());
    std::vector<bool> seen(domain.rank(), false);
    for (std::size_t i = 0; i < generators.size(); ++i) {
      std::size_t k = domain.rank();
      for (std::size_t j = 0; j < domain.rank(); ++j)
        if (domain.element(j) == generators[i]) k = j;
      if (k == domain.rank()) throw InputError("hom out of an infinite group needs standard generators");
      std_images[k] = images[i];
      seen[k] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      throw InputError("every standard generator needs an image");
    GroupHom h(domain, codomain, std::move(std_images));
    if (!h.is_homomorphism()) throw InputError("generator images do not commute");
    return h;
  }
  const auto& g = domain.table();
  std::vector<std::optional<GroupElement>> img(g.order());
  img[g.identity()] = codomain.identity();
  std::vector<std::size_t> frontier{g.identity()};
  while (!frontier.empty()) {
    std::size_t x = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < generators.size(); ++i) {
      std::size_t y = g.mul(x, domain.index(generators[i]));
      GroupElement hy = codomain.multiply(*img[x], images[i]);
      if (!img[y]) {
        img[y] = hy;
        frontier.push_back(y);
      } else if (*img[y] != hy) {
        throw InputError("generator images do not extend to a homomorphism");
      }
    }
  }
  std::vector<GroupElement> all;
  for (auto& e : img) {
    if (!e) throw InputError("given elements do not generate the domain");
    all.push_back(*e);
  }
  GroupHom h(domain, codomain, std::move(all));
  if (!h.is_homomorphism()) throw InputError("generator images do not extend to a homomorphism");
  return h;
}

GroupElement GroupHom::apply(const GroupElement& a) const {
  domain_.validate(a);
  switch (domain_.kind()) {
    case Group::Kind::Finite:
      return images_[domain_.index(a)];
    case Group::Kind::FreeAbelian: {
      GroupElement out = codomain_.identity();
      for (std::size_t i = 0; i < domain_.rank(); ++i)
        out = codomain_.multiply(out, codomain_.power(images_[i], static_cast<long>(a.code[i])));
      return out;
    }
    case Group::Kind::Free: {
      GroupElement out = codomain_.identity();
      for (auto l : a.code) {
        std::size_t i = static_cast<std::size_t>(l < 0 ? -l : l) - 1;
        out = codomain_.multiply(out, l < 0 ? codomain_.inverse(images_[i]) : images_[i]);
      }
      return out;
    }
  }
  return {};
}

bool GroupHom::is_homomorphism() const {
  switch (domain_.kind()) {
    case Group::Kind::Finite: {
      const auto& g = domain_.table();
      for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
          if (images_[g.mul(a, b)] != codomain_.multiply(images_[a], images_[b])) return false;
      return true;
    }
    case Group::Kind::FreeAbelian:
      for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (codomain_.multiply(images_[i], images_[j]) !=
              codomain_.multiply(images_[j], images_[i]))
            return false;
      return true;
    case Group::Kind::Free:
      return true;
  }
  return false;
}

bool GroupHom::is_injective() const {
  if (!domain_.is_finite()) throw Unsupported("injectivity check needs a finite domain");
  auto sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool GroupHom::is_bijective() const {
  if (!codomain_.is_finite()) return false;
  return is_injective() && images_.size() == codomain_.table().order();
}

GroupHom compose(const GroupHom& second, const GroupHom& first) {
  if (!(first.codomain() == second.domain())) throw InputError("group homs are not composable");
  std::vector<GroupElement> images;
  for (const auto& e : first.images()) images.push_back(second.apply(e));
  return GroupHom(first.domain(), second.codomain(), std::move(images));
}

std::vector<GroupHom> enumerate_homs(const Group& g, const Group& h, std::size_t max_domain_order) {
  std::vector<GroupHom> out;
  for (const auto& table : enumerate_hom_tables(g.table(), h.table(), max_domain_order)) {
    std::vector<GroupElement> images;
    for (auto i : table) images.push_back(h.element(i));
    out.emplace_back(g, h, std::move(images));
  }
  return out;
}

}  // namespace gradalg
