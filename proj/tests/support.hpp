#pragma once

#include <vector>

#include "weylsb/weylsb.hpp"

namespace weylsb::testing {

inline Scalar q(long num, long den = 1) { return Scalar(mpq_class(num, den)); }

/// c * x^a D^b
inline WeylOperator W(std::vector<Exponent> a, std::vector<Exponent> b, Scalar c = Scalar(1)) {
  return WeylOperator::monomial(MultiIndex(std::move(a), b), c);
}

/// c * t^k x^a D^b
inline HomogOperator H(Exponent k, std::vector<Exponent> a, std::vector<Exponent> b,
                       Scalar c = Scalar(1)) {
  return HomogOperator::monomial(HomogIndex(k, MultiIndex(std::move(a), b)), c);
}

inline MultiIndex M(std::vector<Exponent> a, std::vector<Exponent> b) {
  return MultiIndex(std::move(a), b);
}

inline HomogIndex HI(Exponent k, std::vector<Exponent> a, std::vector<Exponent> b) {
  return HomogIndex(k, MultiIndex(std::move(a), b));
}

}  // namespace weylsb::testing
