#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "weylsb/extended_int.hpp"
#include "weylsb/operator.hpp"

namespace weylsb {

/// Accumulator for Lambda values; exact for 32-bit exponents and 64-bit weights.
__extension__ typedef __int128 WideInt;

/// Integer weights Lambda(alpha, beta) = sum p_i alpha_i + sum q_i beta_i with
/// p_i + q_i >= 0. Induces the admissible order function
/// delta(P) = max { Lambda(a) : a in N(P) }.
class LinearForm {
 public:
  /// Throws std::invalid_argument if sizes differ, n == 0, or some p_i + q_i < 0.
  LinearForm(std::vector<std::int64_t> p, std::vector<std::int64_t> q);

  /// Order of differential operators: Lambda = |beta|.
  static LinearForm order_form(std::size_t n);
  /// Malgrange-Kashiwara V-filtration along x_n = 0: Lambda = beta_n - alpha_n.
  static LinearForm v_form(std::size_t n);
  /// Bernstein filtration: Lambda = |alpha| + |beta|.
  static LinearForm bernstein(std::size_t n);
  /// L-filtration for L(a,b) = r a + s b:
  /// Lambda = -s alpha_n + r (beta_1 + ... + beta_{n-1}) + (r + s) beta_n.
  static LinearForm l_form(std::size_t n, std::int64_t r, std::int64_t s);
  /// Multi-filtration FV along x_1..x_k with s = (s_1..s_k):
  /// Lambda = -sum s_i alpha_i + sum_{i<=k} (r + s_i) beta_i + r sum_{i>k} beta_i.
  static LinearForm multi_filtration(std::size_t n, std::int64_t r,
                                     const std::vector<std::int64_t>& s);

  std::size_t nvars() const { return p_.size(); }
  const std::vector<std::int64_t>& p() const { return p_; }
  const std::vector<std::int64_t>& q() const { return q_; }

  /// Exact value in 128 bits; cannot overflow for 32-bit exponents.
  WideInt value_wide(const MultiIndex& m) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<std::int64_t> p_;
  std::vector<std::int64_t> q_;
};

/// Lambda(alpha, beta). Throws std::overflow_error if it leaves int64 range.
std::int64_t lambda_value(const LinearForm& form, const MultiIndex& m);
/// delta_Lambda(P); -infinity for P = 0.
ExtendedInt delta_value(const LinearForm& form, const WeylOperator& p);
/// True iff p_i + q_i > 0 for all i, i.e. gr_delta(A_n) is a commutative polynomial ring.
bool is_graded_commutative(const LinearForm& form);

enum class MonomialOrder { lex, deglex, degrevlex };

/// A well monomial ordering on N^{2n}, the fixed tie-break below delta.
///
/// The 2n variable slots are x_1..x_n (slots 0..n-1) and D_1..D_n (slots
/// n..2n-1). `ascending` lists the slots from the smallest variable to the
/// largest; the default is x_1 < ... < x_n < D_1 < ... < D_n.
class TieBreak {
 public:
  explicit TieBreak(std::size_t n, MonomialOrder kind = MonomialOrder::degrevlex);
  /// Throws std::invalid_argument unless `ascending` is a permutation of 0..2n-1.
  TieBreak(MonomialOrder kind, std::vector<std::size_t> ascending);

  std::size_t nvars() const { return ascending_.size() / 2; }
  MonomialOrder kind() const { return kind_; }
  const std::vector<std::size_t>& ascending() const { return ascending_; }

  std::strong_ordering compare(const MultiIndex& a, const MultiIndex& b) const;

  friend bool operator==(const TieBreak&, const TieBreak&) = default;

 private:
  MonomialOrder kind_;
  std::vector<std::size_t> ascending_;
};

std::string to_string(MonomialOrder kind);
/// Accepts "lex", "deglex", "degrevlex". Throws std::invalid_argument otherwise.
MonomialOrder parse_monomial_order(const std::string& name);

/// A linear form plus a tie-break. Induces
///   prec_delta on N^{2n}: Lambda value first, then the tie-break;
///   prec_L on N^{2n+1}: k+|alpha|+|beta| first, then prec_delta on (alpha, beta).
/// prec_delta is not well founded when Lambda takes negative values; prec_L is.
class OrderContext {
 public:
  explicit OrderContext(LinearForm lambda);
  OrderContext(LinearForm lambda, TieBreak tiebreak);

  std::size_t nvars() const { return lambda_.nvars(); }
  const LinearForm& lambda() const { return lambda_; }
  const TieBreak& tiebreak() const { return tiebreak_; }

  std::strong_ordering compare_delta(const MultiIndex& a, const MultiIndex& b) const;
  std::strong_ordering compare_L(const HomogIndex& a, const HomogIndex& b) const;

 private:
  LinearForm lambda_;
  TieBreak tiebreak_;
};

inline std::strong_ordering compare_delta(const OrderContext& ctx, const MultiIndex& a,
                                          const MultiIndex& b) {
  return ctx.compare_delta(a, b);
}
inline std::strong_ordering compare_L(const OrderContext& ctx, const HomogIndex& a,
                                      const HomogIndex& b) {
  return ctx.compare_L(a, b);
}

/// Strict "greater" comparators, for containers kept in descending order.
struct DeltaGreater {
  const OrderContext* ctx;
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return ctx->compare_delta(a, b) > 0;
  }
};
struct LGreater {
  const OrderContext* ctx;
  bool operator()(const HomogIndex& a, const HomogIndex& b) const {
    return ctx->compare_L(a, b) > 0;
  }
};

template <class Index>
struct LeadingData {
  Index exponent;
  Scalar coefficient;
};

/// exp_delta(P) = max_{prec_delta} N(P) and its coefficient c_delta(P).
/// Throws std::domain_error("no exponent of zero") for P = 0.
LeadingData<MultiIndex> exp_delta(const OrderContext& ctx, const WeylOperator& p);
/// exp_delta(H) = max_{prec_L} N(H). Throws std::domain_error for H = 0.
LeadingData<HomogIndex> exp_homog(const OrderContext& ctx, const HomogOperator& h);

/// Principal symbol sigma_delta(P): the terms of P with Lambda = delta(P).
/// Read through the graded-ring isomorphism (commutative when
/// is_graded_commutative, a mixed Weyl algebra otherwise).
/// Throws std::domain_error for P = 0.
WeylOperator symbol(const LinearForm& form, const WeylOperator& p);
inline WeylOperator symbol(const OrderContext& ctx, const WeylOperator& p) {
  return symbol(ctx.lambda(), p);
}

}  // namespace weylsb
