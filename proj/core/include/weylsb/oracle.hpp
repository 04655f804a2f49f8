#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylsb/operator.hpp"
#include "weylsb/order.hpp"
#include "weylsb/standard_basis.hpp"

namespace weylsb {

/// Raised when the truncated linear system would exceed the configured size.
class OracleTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct OracleOptions {
  /// Upper bound on the total number of matrix rows (monomial multiples).
  std::size_t max_rows = 200000;
};

/// Leading exponents of the truncation of the homogenized ideal to graded
/// degree <= degree_bound, found by exact linear algebra.
struct TruncationWitness {
  std::uint64_t degree_bound = 0;
  std::set<HomogIndex> leading_exponents;
  std::size_t matrix_rank = 0;
};

/// Brute-force Exp of the ideal generated by h(P_1)..h(P_r) in A_n[t], up to
/// degree d.
///
/// The degree-e part of that homogeneous ideal is spanned by the products
/// t^k x^g D^b * h(P_i) of degree e. Each degree is row-reduced on its own
/// with columns in prec_L-descending order; the pivot columns are exactly the
/// leading exponents of nonzero elements. Shares no code with division or
/// completion.
///
/// Throws std::invalid_argument for a zero generator or d below the largest
/// generator degree, and OracleTooLarge past options.max_rows.
TruncationWitness truncated_exponents(const OrderContext& ctx, std::span<const WeylOperator> gens,
                                      std::uint64_t d, const OracleOptions& options = {});

/// pi of truncated_exponents(...): exponents of Exp_delta(I) witnessed by
/// elements of degree <= d.
std::set<MultiIndex> staircase_oracle(const OrderContext& ctx, std::span<const WeylOperator> gens,
                                      std::uint64_t d, const OracleOptions& options = {});

struct OracleAgreement {
  bool agree = true;
  /// d - (largest generator degree); projected comparisons are limited to it.
  std::uint64_t window = 0;
  /// Every homogeneous basis element has degree <= window, so the minimal
  /// staircases were compared for exact equality.
  bool full_window = false;
  std::vector<MultiIndex> oracle_staircase;
  std::vector<std::string> discrepancies;
};

/// Compares a pipeline run with a witness for the same generators:
///  - in N^{2n+1}: the witness equals the degree <= d part of the upper set
///    of the homogeneous basis exponents;
///  - in N^{2n}: pipeline staircase elements coming from degree <= window
///    appear in the projected witness, and projected witness elements of
///    degree <= window lie above the pipeline staircase;
///  - if the whole basis lies inside the window, the minimal staircases agree.
OracleAgreement compare_with_pipeline(const OrderContext& ctx, const StandardBasisReport& report,
                                      const TruncationWitness& witness);

/// All exponents (k, alpha, beta) in N^{2n+1} of graded degree exactly d.
std::vector<HomogIndex> homog_monomials_of_degree(std::size_t n, std::uint64_t d);

}  // namespace weylsb
