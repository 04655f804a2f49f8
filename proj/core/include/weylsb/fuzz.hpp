#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "weylsb/operator.hpp"

namespace weylsb {

using WeylProduct = std::function<WeylOperator(const WeylOperator&, const WeylOperator&)>;

struct FuzzOptions {
  std::uint64_t seed = 1;
  /// Cases per suite. 0 runs nothing and yields an empty report.
  std::size_t cases = 0;
  std::size_t max_vars = 2;
  std::uint64_t max_degree = 4;
  std::size_t max_terms = 4;
  /// Product under test; mul_weyl when empty. Lets tests inject mutants.
  WeylProduct product;
};

struct SuiteOutcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Verbatim description of the first failing case.
  std::string first_counterexample;
};

struct FuzzReport {
  std::vector<SuiteOutcome> suites;

  std::size_t total_failures() const;
  bool empty() const { return suites.empty(); }
};

/// Randomized invariant suites: associativity in A_n and A_n[t], centrality
/// of t, the action homomorphism, round trip and multiplicativity of h,
/// additivity of delta-exponents under products, and division certificates.
/// Deterministic for a given seed.
FuzzReport algebra_fuzz(const FuzzOptions& options);

}  // namespace weylsb
