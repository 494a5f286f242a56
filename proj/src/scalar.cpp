#include "gradalg/scalar.hpp"

#include "gradalg/error.hpp"

#include <charconv>

namespace gradalg {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

void require_same_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field())
    throw InputError("scalar field mismatch: " + a.field().name() + " vs " +
                     b.field().name());
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw InputError("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

std::vector<Scalar> Field::elements() const {
  if (is_rational()) throw Unsupported("Q has infinitely many elements");
  std::vector<Scalar> out;
  out.reserve(p_);
  for (std::uint32_t r = 0; r < p_; ++r) out.push_back(Scalar::from_int(*this, r));
  return out;
}

Scalar Scalar::from_int(Field f, long v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_ = v;
  } else {
    long p = f.characteristic();
    long r = v % p;
    if (r < 0) r += p;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_ = q;
    s.q_.canonicalize();
    return s;
  }
  std::uint32_t p = f.characteristic();
  std::uint64_t den = reduce_mpz(q.get_den(), p);
  if (den == 0) throw InputError("denominator vanishes in " + f.name());
  std::uint64_t num = reduce_mpz(q.get_num(), p);
  s.r_ = num * mod_pow(den, p - 2, p) % p;
  return s;
}

Scalar Scalar::parse(Field f, std::string_view text) {
  auto trim = [](std::string_view t) {
    while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    return t;
  };
  text = trim(text);
  auto slash = text.find('/');
  std::string num(trim(text.substr(0, slash)));
  std::string den = slash == std::string_view::npos
                        ? std::string("1")
                        : std::string(trim(text.substr(slash + 1)));
  mpz_class n, d;
  if (num.empty() || den.empty() || n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw InputError("malformed scalar '" + std::string(text) + "'");
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  // gmpxx expects a positive denominator before canonicalize().
  if (d < 0) n = -n, d = -d;
  mpq_class q(n, d);
  q.canonicalize();
  return from_rational(f, q);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw InputError("rational() on a GF(p) scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw InputError("residue() on a rational scalar");
  return r_;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = mod_pow(r_, field_.characteristic() - 2, field_.characteristic());
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  Scalar s = a;
  if (a.field_.is_rational())
    s.q_ = a.q_ + b.q_;
  else
    s.r_ = (a.r_ + b.r_) % a.field_.characteristic();
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  Scalar s = a;
  if (a.field_.is_rational())
    s.q_ = a.q_ * b.q_;
  else
    s.r_ = a.r_ * b.r_ % a.field_.characteristic();
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b) {
  if (auto c = a.field_.characteristic() <=> b.field_.characteristic(); c != 0) return c;
  if (a.field_.is_rational()) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  return a.r_ <=> b.r_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  return std::to_string(r_);
}

Vector zero_vector(Field f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(Field f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

}  // namespace gradalg
