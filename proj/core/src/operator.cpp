#include "weylsb/operator.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

namespace weylsb {

std::ostream& operator<<(std::ostream& os, const ExtendedInt& v) { return os << v.to_string(); }

namespace {

// Calls emit(alpha_beta, |nu|, weight) for every term of
//   x^a D^b * x^g D^d = sum_nu w(nu) x^(a+g-nu) D^(b+d-nu),
//   w(nu) = prod_i C(b_i,nu_i) C(g_i,nu_i) nu_i!,
// with 0 <= nu_i <= min(b_i, g_i).
template <class Emit>
void for_each_contraction(const MultiIndex& left, const MultiIndex& right, Emit&& emit) {
  const std::size_t n = left.nvars();

  // factor[i][v] = C(b_i, v) C(g_i, v) v!
  std::vector<std::vector<mpz_class>> factor(n);
  std::vector<Exponent> limit(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Exponent b = left.beta(i);
    const Exponent g = right.alpha(i);
    limit[i] = std::min(b, g);
    factor[i].resize(limit[i] + 1);
    mpz_class fact = 1;
    for (Exponent v = 0; v <= limit[i]; ++v) {
      if (v > 0) fact *= v;
      mpz_class cb, cg;
      mpz_bin_uiui(cb.get_mpz_t(), b, v);
      mpz_bin_uiui(cg.get_mpz_t(), g, v);
      factor[i][v] = cb * cg * fact;
    }
  }

  MultiIndex base = left + right;
  std::vector<Exponent> nu(n, 0);
  while (true) {
    MultiIndex idx = base;
    mpz_class weight = 1;
    Exponent total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      idx.alpha(i) -= nu[i];
      idx.beta(i) -= nu[i];
      if (nu[i] > 0) weight *= factor[i][nu[i]];
      total += nu[i];
    }
    emit(idx, total, weight);

    std::size_t i = 0;
    while (i < n && nu[i] == limit[i]) nu[i++] = 0;
    if (i == n) break;
    ++nu[i];
  }
}

template <class Index>
Operator<Index> drop_zeros(std::size_t n, std::map<Index, Scalar>&& acc) {
  Operator<Index> r(n);
  for (auto& [index, c] : acc) {
    if (!c.is_zero()) r.add_term(index, c);
  }
  return r;
}

}  // namespace

WeylOperator operator*(const WeylOperator& p, const WeylOperator& q) {
  p.check_compatible(q);
  std::map<MultiIndex, Scalar> acc;
  for (const auto& [lm, lc] : p.terms()) {
    for (const auto& [rm, rc] : q.terms()) {
      const Scalar c = lc * rc;
      for_each_contraction(lm, rm, [&](const MultiIndex& idx, Exponent, const mpz_class& w) {
        acc[idx] += (w == 1) ? c : c * Scalar(w);
      });
    }
  }
  return drop_zeros(p.nvars(), std::move(acc));
}

HomogOperator operator*(const HomogOperator& h, const HomogOperator& g) {
  h.check_compatible(g);
  std::map<HomogIndex, Scalar> acc;
  for (const auto& [lm, lc] : h.terms()) {
    for (const auto& [rm, rc] : g.terms()) {
      const Scalar c = lc * rc;
      const Exponent k = lm.k + rm.k;
      for_each_contraction(lm.m, rm.m, [&](const MultiIndex& idx, Exponent nu, const mpz_class& w) {
        acc[HomogIndex(k + 2 * nu, idx)] += (w == 1) ? c : c * Scalar(w);
      });
    }
  }
  return drop_zeros(h.nvars(), std::move(acc));
}

WeylOperator weyl_constant(std::size_t n, const Scalar& c) {
  WeylOperator r(n);
  r.add_term(MultiIndex(n), c);
  return r;
}

WeylOperator weyl_x(std::size_t n, std::size_t i) {
  MultiIndex m(n);
  m.alpha(i) = 1;
  return WeylOperator::monomial(m);
}

WeylOperator weyl_d(std::size_t n, std::size_t i) {
  MultiIndex m(n);
  m.beta(i) = 1;
  return WeylOperator::monomial(m);
}

HomogOperator homog_constant(std::size_t n, const Scalar& c) {
  HomogOperator r(n);
  r.add_term(HomogIndex(n), c);
  return r;
}

HomogOperator homog_t(std::size_t n, Exponent power) {
  HomogIndex h(n);
  h.k = power;
  return HomogOperator::monomial(h);
}

HomogOperator homog_x(std::size_t n, std::size_t i) {
  HomogIndex h(n);
  h.m.alpha(i) = 1;
  return HomogOperator::monomial(h);
}

HomogOperator homog_d(std::size_t n, std::size_t i) {
  HomogIndex h(n);
  h.m.beta(i) = 1;
  return HomogOperator::monomial(h);
}

std::set<MultiIndex> newton_diagram(const WeylOperator& p) {
  std::set<MultiIndex> out;
  for (const auto& [m, c] : p.terms()) out.insert(m);
  return out;
}

std::set<HomogIndex> newton_diagram(const HomogOperator& h) {
  std::set<HomogIndex> out;
  for (const auto& [m, c] : h.terms()) out.insert(m);
  return out;
}

ExtendedInt total_order(const WeylOperator& p) {
  ExtendedInt best;
  for (const auto& [m, c] : p.terms()) {
    best = std::max(best, ExtendedInt(static_cast<std::int64_t>(m.degree())));
  }
  return best;
}

}  // namespace weylsb
