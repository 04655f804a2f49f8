#include "weylsb/homogenize.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace weylsb {

HomogOperator homogenize(const WeylOperator& p) {
  if (p.is_zero()) throw std::domain_error("homogenization of zero undefined");
  const std::uint64_t top = static_cast<std::uint64_t>(total_order(p).value());
  HomogOperator out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    out.add_term(HomogIndex(static_cast<Exponent>(top - m.degree()), m), c);
  }
  return out;
}

WeylOperator dehomogenize(const HomogOperator& h) {
  WeylOperator out(h.nvars());
  for (const auto& [idx, c] : h.terms()) out.add_term(idx.m, c);
  return out;
}

std::optional<std::uint64_t> graded_degree(const HomogOperator& h) {
  if (h.is_zero()) throw std::domain_error("graded degree of zero undefined");
  const std::uint64_t d = h.terms().begin()->first.degree();
  for (const auto& [idx, c] : h.terms()) {
    if (idx.degree() != d) return std::nullopt;
  }
  return d;
}

bool is_homogeneous(const HomogOperator& h) {
  return h.is_zero() || graded_degree(h).has_value();
}

HomogOperator multiply_by_t(const HomogOperator& h, Exponent k) {
  HomogOperator out(h.nvars());
  for (const auto& [idx, c] : h.terms()) out.add_term(HomogIndex(idx.k + k, idx.m), c);
  return out;
}

Exponent t_adic_valuation(const HomogOperator& h) {
  if (h.is_zero()) return 0;
  Exponent v = std::numeric_limits<Exponent>::max();
  for (const auto& [idx, c] : h.terms()) v = std::min(v, idx.k);
  return v;
}

}  // namespace weylsb
