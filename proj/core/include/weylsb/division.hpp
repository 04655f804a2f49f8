#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weylsb/operator.hpp"
#include "weylsb/order.hpp"

namespace weylsb {

/// Partition of N^{2n+1} induced by an ordered list of leading exponents
/// e_1..e_r:
///   Delta_i = (e_i + N^{2n+1}) minus Delta_1..Delta_{i-1},
///   complement = N^{2n+1} minus the union of all e_i + N^{2n+1}.
class DeltaPartition {
 public:
  explicit DeltaPartition(std::vector<HomogIndex> corners) : corners_(std::move(corners)) {}

  /// Index i of the region containing `e`, or nullopt for the complement.
  std::optional<std::size_t> region(const HomogIndex& e) const;
  const std::vector<HomogIndex>& corners() const { return corners_; }

 private:
  std::vector<HomogIndex> corners_;
};

struct DivisionResult {
  std::vector<HomogOperator> quotients;
  HomogOperator remainder;
};

/// The unique (Q_1..Q_r, R) with H = sum Q_i P_i + R,
/// exp(P_i) + N(Q_i) in Delta_i and N(R) in the complement, where the
/// partition is taken from the prec_L leading exponents of the divisors in
/// the given order.
///
/// Repeatedly takes the prec_L-leading term of the running operator: if it
/// lies in Delta_i it is cancelled by a monomial multiple of P_i, otherwise it
/// moves to R. Terminates because prec_L is a well ordering.
///
/// Throws std::invalid_argument for a zero divisor or mismatched n.
DivisionResult divide(const OrderContext& ctx, const HomogOperator& h,
                      std::span<const HomogOperator> divisors);

/// divide(...).remainder == 0.
bool reduces_to_zero(const OrderContext& ctx, const HomogOperator& h,
                     std::span<const HomogOperator> divisors);

/// Checks reconstruction and both support conditions of a division result.
/// Returns a description of the first violation, or nullopt.
std::optional<std::string> check_division(const OrderContext& ctx, const HomogOperator& h,
                                          std::span<const HomogOperator> divisors,
                                          const DivisionResult& result);

}  // namespace weylsb
