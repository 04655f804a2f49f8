#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace weylsb {

/// An element of F_p, stored as a reduced residue together with its modulus.
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 0;

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Exact coefficient: either an arbitrary-precision rational or an element
/// of a prime field.
///
/// Rationals are the neutral kind: an operation mixing a rational with a
/// residue maps the rational into F_p first. This lets integer constants
/// produced by normal ordering (binomials, factorials) combine with
/// coefficients of either field. Mixing residues of different moduli throws
/// std::invalid_argument.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(mpq_class(value)) {}  // NOLINT(implicit)
  Scalar(const mpz_class& value) : value_(mpq_class(value)) {}  // NOLINT
  Scalar(mpq_class value);  // NOLINT(implicit)
  Scalar(Residue value);    // NOLINT(implicit)

  static Scalar modular(const mpz_class& value, std::uint64_t modulus);

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  /// 0 for rationals.
  std::uint64_t modulus() const;

  /// Throws std::logic_error on a residue.
  const mpq_class& rational() const;
  /// Throws std::logic_error on a rational.
  const Residue& residue() const;

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "num/den" (or "num" when the denominator is 1) for rationals; the
  /// residue in [0, p) for F_p.
  std::string to_string() const;

 private:
  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// The coefficient field of a run: Q, or F_p for a prime p.
class Field {
 public:
  static Field rational() { return Field(0); }
  /// Throws std::invalid_argument unless p is prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return characteristic_ == 0; }
  std::uint64_t characteristic() const { return characteristic_; }

  Scalar from_integer(const mpz_class& v) const;
  /// Throws std::domain_error when the denominator vanishes mod p.
  Scalar from_rational(const mpq_class& v) const;
  Scalar zero() const { return from_integer(0); }
  Scalar one() const { return from_integer(1); }
  /// Maps any scalar into this field.
  Scalar convert(const Scalar& s) const;
  /// Parses "a", "-a", "a/b".
  Scalar parse(const std::string& text) const;

  /// "rational" or "fp(p)".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t characteristic) : characteristic_(characteristic) {}
  std::uint64_t characteristic_ = 0;
};

bool is_prime(std::uint64_t p);

}  // namespace weylsb
