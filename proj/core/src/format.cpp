#include "weylsb/format.hpp"

#include <algorithm>
#include <vector>

namespace weylsb {
namespace {

void append_power(std::string& out, const std::string& var, Exponent e) {
  if (e == 0) return;
  if (!out.empty()) out += '*';
  out += var;
  if (e > 1) out += '^' + std::to_string(e);
}

std::string monomial_text(Exponent k, const MultiIndex& m) {
  std::string out;
  append_power(out, "t", k);
  for (std::size_t i = 0; i < m.nvars(); ++i) append_power(out, "x" + std::to_string(i + 1), m.alpha(i));
  for (std::size_t i = 0; i < m.nvars(); ++i) append_power(out, "D" + std::to_string(i + 1), m.beta(i));
  return out;
}

template <class Index>
std::string render(const std::vector<std::pair<Index, Scalar>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& [idx, c] = terms[t];
    std::string coeff = c.to_string();
    const bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (t == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = format_monomial(idx);
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + '*' + mono;
    }
  }
  return out;
}

template <class Index, class Greater>
std::vector<std::pair<Index, Scalar>> sorted_terms(const Operator<Index>& op, Greater greater) {
  std::vector<std::pair<Index, Scalar>> terms(op.terms().begin(), op.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto& a, const auto& b) { return greater(a.first, b.first); });
  return terms;
}

}  // namespace

std::string format_monomial(const MultiIndex& m) { return monomial_text(0, m); }
std::string format_monomial(const HomogIndex& h) { return monomial_text(h.k, h.m); }

std::string format_operator(const WeylOperator& p, const OrderContext* ctx) {
  if (ctx != nullptr) return render(sorted_terms(p, DeltaGreater{ctx}));
  return render(sorted_terms(p, [](const MultiIndex& a, const MultiIndex& b) {
    return a.degree() > b.degree();
  }));
}

std::string format_operator(const HomogOperator& h, const OrderContext* ctx) {
  if (ctx != nullptr) return render(sorted_terms(h, LGreater{ctx}));
  return render(sorted_terms(h, [](const HomogIndex& a, const HomogIndex& b) {
    return a.degree() > b.degree();
  }));
}

}  // namespace weylsb
