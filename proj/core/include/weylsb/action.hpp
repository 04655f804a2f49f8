#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "weylsb/operator.hpp"

namespace weylsb {

/// Commutative polynomial in x_1..x_n; the carrier of the natural action
/// of A_n (x_i by multiplication, D_i = d/dx_i).
class Polynomial {
 public:
  using Key = std::vector<Exponent>;
  using Terms = std::map<Key, Scalar>;

  explicit Polynomial(std::size_t n = 1) : n_(n) {}
  static Polynomial monomial(Key exponents, const Scalar& c = Scalar(1));

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& exponents, const Scalar& c);

  Polynomial& operator+=(const Polynomial& other);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t n_;
  Terms terms_;
};

/// P(f) for the standard action. apply(P*Q, f) == apply(P, apply(Q, f)).
Polynomial apply(const WeylOperator& p, const Polynomial& f);

}  // namespace weylsb
