#include "weylsb/action.hpp"

#include <stdexcept>

namespace weylsb {

Polynomial Polynomial::monomial(Key exponents, const Scalar& c) {
  Polynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

void Polynomial::add_term(const Key& exponents, const Scalar& c) {
  if (exponents.size() != n_) throw std::invalid_argument("polynomial monomial has wrong arity");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

Polynomial apply(const WeylOperator& p, const Polynomial& f) {
  if (p.nvars() != f.nvars()) throw std::invalid_argument("operator and polynomial arity differ");
  const std::size_t n = p.nvars();
  Polynomial out(n);
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [key, fc] : f.terms()) {
      // D^beta x^key = prod_i key_i!/(key_i-beta_i)! x^(key-beta), zero if beta_i > key_i.
      mpz_class falling = 1;
      Polynomial::Key e(n);
      bool vanishes = false;
      for (std::size_t i = 0; i < n && !vanishes; ++i) {
        if (m.beta(i) > key[i]) {
          vanishes = true;
          break;
        }
        for (Exponent j = 0; j < m.beta(i); ++j) falling *= key[i] - j;
        e[i] = key[i] - m.beta(i) + m.alpha(i);
      }
      if (!vanishes) out.add_term(e, c * fc * Scalar(falling));
    }
  }
  return out;
}

}  // namespace weylsb
