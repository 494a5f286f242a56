#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gradalg {

/// Base field tag: the rationals (p == 0) or the prime field GF(p).
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws InputError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  /// All field elements for GF(p); throws Unsupported for Q.
  std::vector<class Scalar> elements() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); residues lie in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(Field f) { return from_int(f, 0); }
  static Scalar one(Field f) { return from_int(f, 1); }
  static Scalar from_int(Field f, long v);
  static Scalar from_rational(Field f, const mpq_class& q);
  /// Parses "n", "-n" or "n/d". For GF(p) the fraction is reduced mod p.
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value (Q only).
  const mpq_class& rational() const;
  /// Residue in [0, p) (GF(p) only).
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws InputError on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Total order used only for canonical sorting (not field order).
  friend std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b);

  /// "num/den" for Q, the residue for GF(p).
  std::string to_string() const;

 private:
  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(Field f, std::size_t n);
Vector unit_vector(Field f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
std::string to_string(const Vector& v);

}  // namespace gradalg
