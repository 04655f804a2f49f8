#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace weylsb {

using Exponent = std::uint32_t;

/// Exponent pair (alpha, beta) in N^{2n} of the normal-ordered monomial
/// x^alpha D^beta. Stored as one vector: alpha first, then beta.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : n_(n), e_(2 * n, 0) {}
  MultiIndex(std::vector<Exponent> alpha, const std::vector<Exponent>& beta);

  std::size_t nvars() const { return n_; }

  Exponent alpha(std::size_t i) const { return e_[i]; }
  Exponent beta(std::size_t i) const { return e_[n_ + i]; }
  Exponent& alpha(std::size_t i) { return e_[i]; }
  Exponent& beta(std::size_t i) { return e_[n_ + i]; }

  std::span<const Exponent> alpha() const { return {e_.data(), n_}; }
  std::span<const Exponent> beta() const { return {e_.data() + n_, n_}; }
  /// All 2n exponents, x-slots first.
  std::span<const Exponent> slots() const { return e_; }
  Exponent& slot(std::size_t s) { return e_[s]; }
  Exponent slot(std::size_t s) const { return e_[s]; }

  /// |alpha| + |beta|.
  std::uint64_t degree() const;
  bool is_zero() const;

  /// Componentwise <=.
  bool divides(const MultiIndex& other) const;

  MultiIndex& operator+=(const MultiIndex& other);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  /// Precondition: b.divides(a).
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

  friend MultiIndex lcm(const MultiIndex& a, const MultiIndex& b);

  /// Storage order; used only for container keys, never as a monomial order.
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Exponent> e_;
};

/// Exponent triple (k, alpha, beta) in N^{2n+1} of t^k x^alpha D^beta.
struct HomogIndex {
  Exponent k = 0;
  MultiIndex m;

  HomogIndex() = default;
  explicit HomogIndex(std::size_t n) : m(n) {}
  HomogIndex(Exponent k_, MultiIndex m_) : k(k_), m(std::move(m_)) {}

  std::size_t nvars() const { return m.nvars(); }
  /// k + |alpha| + |beta|.
  std::uint64_t degree() const { return k + m.degree(); }
  bool is_zero() const { return k == 0 && m.is_zero(); }
  bool divides(const HomogIndex& other) const { return k <= other.k && m.divides(other.m); }

  HomogIndex& operator+=(const HomogIndex& other) {
    k += other.k;
    m += other.m;
    return *this;
  }
  friend HomogIndex operator+(HomogIndex a, const HomogIndex& b) { return a += b; }
  friend HomogIndex operator-(const HomogIndex& a, const HomogIndex& b) {
    return {a.k - b.k, a.m - b.m};
  }
  friend HomogIndex lcm(const HomogIndex& a, const HomogIndex& b) {
    return {a.k > b.k ? a.k : b.k, lcm(a.m, b.m)};
  }

  friend auto operator<=>(const HomogIndex&, const HomogIndex&) = default;
  friend bool operator==(const HomogIndex&, const HomogIndex&) = default;
};

/// pi: N^{2n+1} -> N^{2n}, drops the t-exponent.
inline const MultiIndex& project(const HomogIndex& h) { return h.m; }

std::ostream& operator<<(std::ostream& os, const MultiIndex& m);
std::ostream& operator<<(std::ostream& os, const HomogIndex& h);

}  // namespace weylsb
