#include "weylsb/random.hpp"

#include <algorithm>
#include <numeric>

namespace weylsb {

std::uint64_t OperatorSampler::uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
}

bool OperatorSampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Scalar OperatorSampler::coefficient() {
  static constexpr long kDenominators[] = {1, 1, 1, 2, 3};
  while (true) {
    long num = static_cast<long>(uniform(1, 5));
    if (coin()) num = -num;
    const long den = kDenominators[uniform(0, 4)];
    Scalar c = field_.from_rational(mpq_class(num, den));
    if (!c.is_zero()) return c;
  }
}

MultiIndex OperatorSampler::monomial_of_degree(std::size_t n, std::uint64_t degree) {
  MultiIndex m(n);
  for (std::uint64_t d = 0; d < degree; ++d) ++m.slot(uniform(0, 2 * n - 1));
  return m;
}

MultiIndex OperatorSampler::monomial(std::size_t n, std::uint64_t max_degree) {
  return monomial_of_degree(n, uniform(0, max_degree));
}

HomogIndex OperatorSampler::homog_monomial_of_degree(std::size_t n, std::uint64_t degree) {
  HomogIndex h(n);
  for (std::uint64_t d = 0; d < degree; ++d) {
    const std::uint64_t s = uniform(0, 2 * n);
    if (s == 2 * n) {
      ++h.k;
    } else {
      ++h.m.slot(s);
    }
  }
  return h;
}

HomogIndex OperatorSampler::homog_monomial(std::size_t n, std::uint64_t max_degree) {
  return homog_monomial_of_degree(n, uniform(0, max_degree));
}

WeylOperator OperatorSampler::weyl(std::size_t n, std::uint64_t max_degree, std::size_t max_terms) {
  WeylOperator p(n);
  const std::size_t terms = uniform(0, max_terms);
  for (std::size_t t = 0; t < terms; ++t) p.add_term(monomial(n, max_degree), coefficient());
  return p;
}

WeylOperator OperatorSampler::nonzero_weyl(std::size_t n, std::uint64_t max_degree,
                                           std::size_t max_terms) {
  while (true) {
    WeylOperator p(n);
    const std::size_t terms = uniform(1, std::max<std::size_t>(1, max_terms));
    for (std::size_t t = 0; t < terms; ++t) p.add_term(monomial(n, max_degree), coefficient());
    if (!p.is_zero()) return p;
  }
}

HomogOperator OperatorSampler::homogeneous(std::size_t n, std::uint64_t degree,
                                           std::size_t max_terms) {
  while (true) {
    HomogOperator h(n);
    const std::size_t terms = uniform(1, std::max<std::size_t>(1, max_terms));
    for (std::size_t t = 0; t < terms; ++t) {
      h.add_term(homog_monomial_of_degree(n, degree), coefficient());
    }
    if (!h.is_zero()) return h;
  }
}

HomogOperator OperatorSampler::homog(std::size_t n, std::uint64_t max_degree, std::size_t max_terms) {
  while (true) {
    HomogOperator h(n);
    const std::size_t terms = uniform(1, std::max<std::size_t>(1, max_terms));
    for (std::size_t t = 0; t < terms; ++t) h.add_term(homog_monomial(n, max_degree), coefficient());
    if (!h.is_zero()) return h;
  }
}

Polynomial OperatorSampler::polynomial(std::size_t n, std::uint64_t max_degree, std::size_t max_terms) {
  Polynomial f(n);
  const std::size_t terms = uniform(0, max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    Polynomial::Key key(n, 0);
    const std::uint64_t degree = uniform(0, max_degree);
    for (std::uint64_t d = 0; d < degree; ++d) ++key[uniform(0, n - 1)];
    f.add_term(key, coefficient());
  }
  return f;
}

LinearForm OperatorSampler::linear_form(std::size_t n, std::int64_t bound) {
  std::vector<std::int64_t> p(n), q(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = std::uniform_int_distribution<std::int64_t>(-bound, bound)(rng_);
    q[i] = std::uniform_int_distribution<std::int64_t>(std::max(-bound, -p[i]), bound)(rng_);
  }
  return {p, q};
}

TieBreak OperatorSampler::tiebreak(std::size_t n) {
  static constexpr MonomialOrder kKinds[] = {MonomialOrder::lex, MonomialOrder::deglex,
                                             MonomialOrder::degrevlex};
  std::vector<std::size_t> slots(2 * n);
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  std::shuffle(slots.begin(), slots.end(), rng_);
  return {kKinds[uniform(0, 2)], slots};
}

}  // namespace weylsb
