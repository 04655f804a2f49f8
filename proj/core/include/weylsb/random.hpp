#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "weylsb/action.hpp"
#include "weylsb/operator.hpp"
#include "weylsb/order.hpp"

namespace weylsb {

/// Reproducible generator of random operators for property tests, the
/// fuzzer and benchmarks. Coefficients are small nonzero rationals mapped
/// into the configured field.
class OperatorSampler {
 public:
  explicit OperatorSampler(std::uint64_t seed, Field field = Field::rational())
      : rng_(seed), field_(field) {}

  std::mt19937_64& engine() { return rng_; }
  const Field& field() const { return field_; }

  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  bool coin(double p = 0.5);

  Scalar coefficient();
  MultiIndex monomial_of_degree(std::size_t n, std::uint64_t degree);
  MultiIndex monomial(std::size_t n, std::uint64_t max_degree);
  HomogIndex homog_monomial_of_degree(std::size_t n, std::uint64_t degree);
  HomogIndex homog_monomial(std::size_t n, std::uint64_t max_degree);

  /// Between 0 and max_terms random terms of total degree <= max_degree; may be 0.
  WeylOperator weyl(std::size_t n, std::uint64_t max_degree, std::size_t max_terms);
  WeylOperator nonzero_weyl(std::size_t n, std::uint64_t max_degree, std::size_t max_terms);
  /// Nonzero, every term of graded degree exactly `degree`.
  HomogOperator homogeneous(std::size_t n, std::uint64_t degree, std::size_t max_terms);
  /// Nonzero, mixed degrees <= max_degree.
  HomogOperator homog(std::size_t n, std::uint64_t max_degree, std::size_t max_terms);
  Polynomial polynomial(std::size_t n, std::uint64_t max_degree, std::size_t max_terms);
  /// Admissible weights with |p_i|, |q_i| <= bound.
  LinearForm linear_form(std::size_t n, std::int64_t bound);
  TieBreak tiebreak(std::size_t n);

 private:
  std::mt19937_64 rng_;
  Field field_;
};

}  // namespace weylsb
