#include "weylsb/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace weylsb {
namespace {

__extension__ typedef unsigned __int128 WideUnsigned;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<WideUnsigned>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
  return r.get_ui();
}

Residue to_residue(const mpq_class& q, std::uint64_t m) {
  const std::uint64_t den = reduce(q.get_den(), m);
  if (den == 0) {
    throw std::domain_error("denominator " + q.get_den().get_str() +
                            " is not invertible modulo " + std::to_string(m));
  }
  const std::uint64_t num = reduce(q.get_num(), m);
  return {mul_mod(num, pow_mod(den, m - 2, m), m), m};
}

void check_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus != b.modulus) {
    throw std::invalid_argument("scalars from different prime fields: F_" +
                                std::to_string(a.modulus) + " and F_" +
                                std::to_string(b.modulus));
  }
}

}  // namespace

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar::Scalar(Residue value) : value_(value) {
  if (value.modulus == 0) throw std::invalid_argument("residue with modulus 0");
  std::get<Residue>(value_).value %= value.modulus;
}

Scalar Scalar::modular(const mpz_class& value, std::uint64_t modulus) {
  return Scalar(Residue{reduce(value, modulus), modulus});
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<Residue>(value_).value == 1;
}

std::uint64_t Scalar::modulus() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->modulus;
  return 0;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw std::logic_error("scalar is not rational");
}

const Residue& Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return *r;
  throw std::logic_error("scalar is not a residue");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(1) / *q);
  const auto& r = std::get<Residue>(value_);
  return Scalar(Residue{pow_mod(r.value, r.modulus - 2, r.modulus), r.modulus});
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
  const auto& r = std::get<Residue>(value_);
  return Scalar(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

// Brings both operands to a common kind. Returns true when the result is a
// residue computation; a and b are then filled.
static bool as_residues(const std::variant<mpq_class, Residue>& x,
                        const std::variant<mpq_class, Residue>& y, Residue& a, Residue& b) {
  const auto* rx = std::get_if<Residue>(&x);
  const auto* ry = std::get_if<Residue>(&y);
  if (rx == nullptr && ry == nullptr) return false;
  if (rx != nullptr && ry != nullptr) {
    check_same_modulus(*rx, *ry);
    a = *rx;
    b = *ry;
  } else if (rx != nullptr) {
    a = *rx;
    b = to_residue(std::get<mpq_class>(y), rx->modulus);
  } else {
    b = *ry;
    a = to_residue(std::get<mpq_class>(x), ry->modulus);
  }
  return true;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  Residue a, b;
  if (as_residues(value_, other.value_, a, b)) {
    const std::uint64_t m = a.modulus;
    std::uint64_t s = a.value + b.value;  // both < m <= 2^63
    if (s >= m) s -= m;
    value_ = Residue{s, m};
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  Residue a, b;
  if (as_residues(value_, other.value_, a, b)) {
    value_ = Residue{mul_mod(a.value, b.value, a.modulus), a.modulus};
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

bool operator==(const Scalar& x, const Scalar& y) {
  Residue a, b;
  if (as_residues(x.value_, y.value_, a, b)) return a.value == b.value;
  return std::get<mpq_class>(x.value_) == std::get<mpq_class>(y.value_);
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<Residue>(value_).value);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  mpz_class z;
  mpz_set_ui(z.get_mpz_t(), p);
  // Deterministic for 64-bit inputs at 50 reps in practice (BPSW + MR).
  return mpz_probab_prime_p(z.get_mpz_t(), 50) != 0;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p > (std::uint64_t{1} << 62U)) throw std::invalid_argument("prime too large (max 2^62)");
  return Field(p);
}

Scalar Field::from_integer(const mpz_class& v) const {
  if (is_rational()) return Scalar(v);
  return Scalar::modular(v, characteristic_);
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (is_rational()) return Scalar(v);
  return Scalar(to_residue(v, characteristic_));
}

Scalar Field::convert(const Scalar& s) const {
  if (s.is_rational()) return from_rational(s.rational());
  if (is_rational()) throw std::invalid_argument("cannot map a residue into the rationals");
  Residue a = s.residue();
  Residue b{0, characteristic_};
  check_same_modulus(a, b);
  return s;
}

Scalar Field::parse(const std::string& text) const {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed number '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return from_rational(q);
}

std::string Field::name() const {
  return is_rational() ? "rational" : "fp(" + std::to_string(characteristic_) + ")";
}

}  // namespace weylsb
