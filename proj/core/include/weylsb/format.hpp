#pragma once

#include <string>

#include "weylsb/operator.hpp"
#include "weylsb/order.hpp"

namespace weylsb {

// Plain-text rendering: terms joined by " + " / " - ", factors by '*',
// variables t, x1..xn, D1..Dn in normal order, e.g. "x1^2*D1 - 3/2*t^2".
// With a context, terms are sorted prec_delta (resp. prec_L) descending;
// without one, by total degree descending then storage order.

std::string format_monomial(const MultiIndex& m);
std::string format_monomial(const HomogIndex& h);
std::string format_operator(const WeylOperator& p, const OrderContext* ctx = nullptr);
std::string format_operator(const HomogOperator& h, const OrderContext* ctx = nullptr);

}  // namespace weylsb
