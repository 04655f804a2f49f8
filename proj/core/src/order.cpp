#include "weylsb/order.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace weylsb {

LinearForm::LinearForm(std::vector<std::int64_t> p, std::vector<std::int64_t> q)
    : p_(std::move(p)), q_(std::move(q)) {
  if (p_.size() != q_.size()) throw std::invalid_argument("p and q must have the same length");
  if (p_.empty()) throw std::invalid_argument("linear form needs n >= 1");
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (static_cast<WideInt>(p_[i]) + q_[i] < 0) {
      throw std::invalid_argument("p_" + std::to_string(i + 1) + " + q_" + std::to_string(i + 1) +
                                  " = " + std::to_string(p_[i]) + " + " + std::to_string(q_[i]) +
                                  " is negative; the order function would not be admissible");
    }
  }
}

LinearForm LinearForm::order_form(std::size_t n) {
  return {std::vector<std::int64_t>(n, 0), std::vector<std::int64_t>(n, 1)};
}

LinearForm LinearForm::v_form(std::size_t n) {
  std::vector<std::int64_t> p(n, 0), q(n, 0);
  if (n > 0) {
    p[n - 1] = -1;
    q[n - 1] = 1;
  }
  return {p, q};
}

LinearForm LinearForm::bernstein(std::size_t n) {
  return {std::vector<std::int64_t>(n, 1), std::vector<std::int64_t>(n, 1)};
}

LinearForm LinearForm::l_form(std::size_t n, std::int64_t r, std::int64_t s) {
  if (r < 0 || s < 0) throw std::invalid_argument("L-form needs r >= 0 and s >= 0");
  std::vector<std::int64_t> p(n, 0), q(n, r);
  if (n > 0) {
    p[n - 1] = -s;
    q[n - 1] = r + s;
  }
  return {p, q};
}

LinearForm LinearForm::multi_filtration(std::size_t n, std::int64_t r,
                                        const std::vector<std::int64_t>& s) {
  if (s.empty() || s.size() > n) throw std::invalid_argument("multi-filtration needs 1 <= k <= n");
  if (r < 0 || std::any_of(s.begin(), s.end(), [](std::int64_t v) { return v < 0; })) {
    throw std::invalid_argument("multi-filtration weights must be non-negative");
  }
  std::vector<std::int64_t> p(n, 0), q(n, r);
  for (std::size_t i = 0; i < s.size(); ++i) {
    p[i] = -s[i];
    q[i] = r + s[i];
  }
  return {p, q};
}

WideInt LinearForm::value_wide(const MultiIndex& m) const {
  WideInt v = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    v += static_cast<WideInt>(p_[i]) * m.alpha(i);
    v += static_cast<WideInt>(q_[i]) * m.beta(i);
  }
  return v;
}

std::int64_t lambda_value(const LinearForm& form, const MultiIndex& m) {
  if (m.nvars() != form.nvars()) throw std::invalid_argument("monomial arity differs from form");
  const WideInt v = form.value_wide(m);
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("Lambda value exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

ExtendedInt delta_value(const LinearForm& form, const WeylOperator& p) {
  ExtendedInt best;
  for (const auto& [m, c] : p.terms()) best = std::max(best, ExtendedInt(lambda_value(form, m)));
  return best;
}

bool is_graded_commutative(const LinearForm& form) {
  for (std::size_t i = 0; i < form.nvars(); ++i) {
    if (static_cast<WideInt>(form.p()[i]) + form.q()[i] <= 0) return false;
  }
  return true;
}

TieBreak::TieBreak(std::size_t n, MonomialOrder kind) : kind_(kind), ascending_(2 * n) {
  std::iota(ascending_.begin(), ascending_.end(), std::size_t{0});
}

TieBreak::TieBreak(MonomialOrder kind, std::vector<std::size_t> ascending)
    : kind_(kind), ascending_(std::move(ascending)) {
  std::vector<std::size_t> sorted = ascending_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    if (sorted[s] != s) throw std::invalid_argument("variable order is not a permutation");
  }
  if (sorted.empty() || sorted.size() % 2 != 0) {
    throw std::invalid_argument("variable order must list 2n slots");
  }
}

std::strong_ordering TieBreak::compare(const MultiIndex& a, const MultiIndex& b) const {
  if (kind_ != MonomialOrder::lex) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  }
  if (kind_ == MonomialOrder::degrevlex) {
    // Smallest variable first; more of it means smaller.
    for (std::size_t slot : ascending_) {
      if (auto c = b.slot(slot) <=> a.slot(slot); c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  for (auto it = ascending_.rbegin(); it != ascending_.rend(); ++it) {
    if (auto c = a.slot(*it) <=> b.slot(*it); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(MonomialOrder kind) {
  switch (kind) {
    case MonomialOrder::lex: return "lex";
    case MonomialOrder::deglex: return "deglex";
    case MonomialOrder::degrevlex: return "degrevlex";
  }
  return "?";
}

MonomialOrder parse_monomial_order(const std::string& name) {
  if (name == "lex") return MonomialOrder::lex;
  if (name == "deglex") return MonomialOrder::deglex;
  if (name == "degrevlex") return MonomialOrder::degrevlex;
  throw std::invalid_argument("unknown tiebreak '" + name + "' (expected lex, deglex or degrevlex)");
}

OrderContext::OrderContext(LinearForm lambda) : OrderContext(lambda, TieBreak(lambda.nvars())) {}

OrderContext::OrderContext(LinearForm lambda, TieBreak tiebreak)
    : lambda_(std::move(lambda)), tiebreak_(std::move(tiebreak)) {
  if (tiebreak_.nvars() != lambda_.nvars()) {
    throw std::invalid_argument("tiebreak and linear form disagree on n");
  }
}

std::strong_ordering OrderContext::compare_delta(const MultiIndex& a, const MultiIndex& b) const {
  const WideInt va = lambda_.value_wide(a);
  const WideInt vb = lambda_.value_wide(b);
  if (va != vb) return va < vb ? std::strong_ordering::less : std::strong_ordering::greater;
  return tiebreak_.compare(a, b);
}

std::strong_ordering OrderContext::compare_L(const HomogIndex& a, const HomogIndex& b) const {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = compare_delta(a.m, b.m); c != 0) return c;
  // Same degree and same (alpha, beta) force the same k.
  return a.k <=> b.k;
}

namespace {

template <class Index, class Cmp>
LeadingData<Index> leading(const Operator<Index>& op, Cmp cmp) {
  if (op.is_zero()) throw std::domain_error("no exponent of zero");
  auto best = op.terms().begin();
  for (auto it = std::next(best); it != op.terms().end(); ++it) {
    if (cmp(it->first, best->first) > 0) best = it;
  }
  return {best->first, best->second};
}

}  // namespace

LeadingData<MultiIndex> exp_delta(const OrderContext& ctx, const WeylOperator& p) {
  return leading(p, [&](const MultiIndex& a, const MultiIndex& b) { return ctx.compare_delta(a, b); });
}

LeadingData<HomogIndex> exp_homog(const OrderContext& ctx, const HomogOperator& h) {
  return leading(h, [&](const HomogIndex& a, const HomogIndex& b) { return ctx.compare_L(a, b); });
}

WeylOperator symbol(const LinearForm& form, const WeylOperator& p) {
  if (p.is_zero()) throw std::domain_error("symbol of zero");
  const ExtendedInt top = delta_value(form, p);
  WeylOperator out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (ExtendedInt(lambda_value(form, m)) == top) out.add_term(m, c);
  }
  return out;
}

}  // namespace weylsb
