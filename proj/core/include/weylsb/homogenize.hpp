#pragma once

#include <cstdint>
#include <optional>

#include "weylsb/operator.hpp"

namespace weylsb {

/// h(P) = sum p_{a,b} t^(ord^T(P) - |a| - |b|) x^a D^b.
/// Homogeneous of degree ord^T(P) and multiplicative: h(PQ) = h(P) h(Q).
/// Throws std::domain_error for P = 0 (ord^T(0) = -infinity has no t-power).
HomogOperator homogenize(const WeylOperator& p);

/// H|_{t=1}: forget t and merge colliding (alpha, beta). Total; works on
/// inhomogeneous input too.
WeylOperator dehomogenize(const HomogOperator& h);

/// Common value of k+|alpha|+|beta| over N(H), or nullopt when H mixes
/// degrees. Throws std::domain_error for H = 0.
std::optional<std::uint64_t> graded_degree(const HomogOperator& h);

/// True for 0 and for operators with a single graded degree.
bool is_homogeneous(const HomogOperator& h);

/// t^k * H.
HomogOperator multiply_by_t(const HomogOperator& h, Exponent k);

/// Largest k with t^k dividing H (0 for H = 0).
Exponent t_adic_valuation(const HomogOperator& h);

}  // namespace weylsb
