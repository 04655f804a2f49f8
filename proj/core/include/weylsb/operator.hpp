#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "weylsb/extended_int.hpp"
#include "weylsb/multi_index.hpp"
#include "weylsb/scalar.hpp"

namespace weylsb {

/// Sparse linear combination of normal-ordered monomials.
///
/// Index is MultiIndex for elements of the Weyl algebra A_n and HomogIndex
/// for elements of the homogenized algebra A_n[t]. Zero coefficients are
/// never stored, so two operators are equal iff their term maps are equal.
/// The map order is storage order; monomial orders live in order.hpp.
template <class Index>
class Operator {
 public:
  using Terms = std::map<Index, Scalar>;

  Operator() = default;
  explicit Operator(std::size_t n) : n_(n) {}

  static Operator monomial(const Index& index, const Scalar& c = Scalar(1)) {
    Operator r(index.nvars());
    r.add_term(index, c);
    return r;
  }

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Index& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Scalar() : it->second;
  }

  /// Adds c * monomial(index), merging and dropping a cancelled term.
  void add_term(const Index& index, const Scalar& c) {
    if (index.nvars() != n_) throw std::invalid_argument("monomial has wrong number of variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(index, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Operator& operator+=(const Operator& other) {
    check_compatible(other);
    for (const auto& [index, c] : other.terms_) add_term(index, c);
    return *this;
  }
  Operator& operator-=(const Operator& other) {
    check_compatible(other);
    for (const auto& [index, c] : other.terms_) add_term(index, -c);
    return *this;
  }
  Operator& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [index, coeff] : terms_) coeff *= c;
    return *this;
  }
  Operator operator-() const {
    Operator r = *this;
    for (auto& [index, coeff] : r.terms_) coeff = -coeff;
    return r;
  }

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(const Scalar& c, Operator a) { return a *= c; }

  friend bool operator==(const Operator& a, const Operator& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  void check_compatible(const Operator& other) const {
    if (other.n_ != n_) {
      throw std::invalid_argument("operators over different numbers of variables (" +
                                  std::to_string(n_) + " vs " + std::to_string(other.n_) + ")");
    }
  }

 private:
  std::size_t n_ = 1;
  Terms terms_;
};

/// Element of A_n(K): sum of a_{alpha,beta} x^alpha D^beta.
using WeylOperator = Operator<MultiIndex>;
/// Element of A_n[t] with t central and [D_i, x_j] = delta_ij t^2.
using HomogOperator = Operator<HomogIndex>;

/// Normal-ordered product in A_n: D^b x^g = sum_nu C(b,nu) C(g,nu) nu! x^(g-nu) D^(b-nu).
WeylOperator operator*(const WeylOperator& p, const WeylOperator& q);
/// Normal-ordered product in A_n[t]; each contraction nu contributes t^(2|nu|).
HomogOperator operator*(const HomogOperator& h, const HomogOperator& g);

inline WeylOperator mul_weyl(const WeylOperator& p, const WeylOperator& q) { return p * q; }
inline HomogOperator mul_homog(const HomogOperator& h, const HomogOperator& g) { return h * g; }

WeylOperator weyl_constant(std::size_t n, const Scalar& c);
/// x_i, 0-based i.
WeylOperator weyl_x(std::size_t n, std::size_t i);
/// D_i, 0-based i.
WeylOperator weyl_d(std::size_t n, std::size_t i);

HomogOperator homog_constant(std::size_t n, const Scalar& c);
HomogOperator homog_t(std::size_t n, Exponent power = 1);
HomogOperator homog_x(std::size_t n, std::size_t i);
HomogOperator homog_d(std::size_t n, std::size_t i);

/// N(P): the exponents carrying nonzero coefficients.
std::set<MultiIndex> newton_diagram(const WeylOperator& p);
std::set<HomogIndex> newton_diagram(const HomogOperator& h);

/// ord^T(P) = max |alpha|+|beta| over N(P); -infinity for 0.
ExtendedInt total_order(const WeylOperator& p);

/// Every key has the operator's variable count and no coefficient is zero.
template <class Index>
bool has_canonical_form(const Operator<Index>& op) {
  for (const auto& [index, c] : op.terms()) {
    if (c.is_zero() || index.nvars() != op.nvars()) return false;
  }
  return true;
}

}  // namespace weylsb
