#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weylsb/operator.hpp"
#include "weylsb/order.hpp"

namespace weylsb {

/// Thrown when completion would need an S-pair above the configured degree cap.
class DegreeCapReached : public std::runtime_error {
 public:
  DegreeCapReached(std::uint64_t degree, std::uint64_t cap);
  std::uint64_t degree() const { return degree_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t degree_;
  std::uint64_t cap_;
};

/// An internal postcondition failed (e.g. a returned basis with a
/// non-reducing semisyzygy). Indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct CompletionOptions {
  /// Largest graded degree of an S-pair (or input) that may be processed.
  std::uint64_t degree_cap = 64;
  /// Drop redundant leading exponents and tail-reduce after completion.
  bool interreduce = true;
  /// Record each basis element as a left combination of the inputs.
  bool track_cofactors = false;
  /// Re-check every semisyzygy of the final basis; throws InvariantViolation.
  bool self_check = true;
};

struct CompletionStats {
  std::size_t pairs_processed = 0;
  std::size_t reductions_to_zero = 0;
  std::uint64_t max_degree = 0;
};

struct Completion {
  std::vector<HomogOperator> basis;
  /// basis[i] == sum_j cofactors[i][j] * gens[j] (only with track_cofactors).
  std::vector<std::vector<HomogOperator>> cofactors;
  CompletionStats stats;
};

/// S(H1, H2) = c(H2) t^l1 x^g1 D^d1 H1 - c(H1) t^l2 x^g2 D^d2 H2, where the
/// monomial offsets lift both leading exponents to their componentwise max.
/// Throws std::invalid_argument for a zero operand.
HomogOperator semisyzygy(const OrderContext& ctx, const HomogOperator& h1, const HomogOperator& h2);

/// Buchberger completion in A_n[t] under prec_L.
///
/// Pairs are processed by increasing graded degree of the lcm exponent,
/// FIFO within a degree; input generators enter the same queue at their own
/// degree. Every pair is reduced (no pair-skipping criteria). Remainders are
/// made monic before joining the basis. On return every semisyzygy of the
/// basis reduces to zero against it.
///
/// Throws std::invalid_argument for a zero generator and DegreeCapReached.
Completion buchberger(const OrderContext& ctx, std::span<const HomogOperator> gens,
                      const CompletionOptions& options = {});

/// First (i, j), i < j, whose semisyzygy does not reduce to zero, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_nonreducing_pair(
    const OrderContext& ctx, std::span<const HomogOperator> basis);

/// Minimal generators of the upper set generated by `exponents` under the
/// componentwise order, sorted.
std::vector<MultiIndex> minimal_staircase(std::span<const MultiIndex> exponents);

/// Whether e lies in the upper set generated by `staircase`.
bool in_upper_set(std::span<const MultiIndex> staircase, const MultiIndex& e);

struct StandardBasisReport {
  /// h(P_i) for the nonzero inputs, in input order.
  std::vector<HomogOperator> homog_generators;
  /// delta-standard basis of the ideal generated by homog_generators.
  std::vector<HomogOperator> homog_basis;
  /// G|_{t=1}: a delta-standard basis of the input ideal.
  std::vector<WeylOperator> delta_basis;
  /// sigma_delta of each delta_basis element: generators of gr_delta(I).
  std::vector<WeylOperator> symbols;
  /// Minimal generators of Exp_delta(I).
  std::vector<MultiIndex> staircase;
  CompletionStats stats;
  /// homog_basis[i] == sum_j cofactors[i][j] * homog_generators[j] (when tracked).
  std::vector<std::vector<HomogOperator>> cofactors;
};

/// Homogenize, complete, dehomogenize, take symbols, read off the staircase.
/// Zero generators are ignored; throws std::domain_error("zero ideal") if
/// nothing remains.
StandardBasisReport std_basis_pipeline(const OrderContext& ctx, std::span<const WeylOperator> gens,
                                       const CompletionOptions& options = {});

}  // namespace weylsb
