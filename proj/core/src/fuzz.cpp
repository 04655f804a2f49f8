#include "weylsb/fuzz.hpp"

#include <numeric>
#include <optional>

#include "weylsb/action.hpp"
#include "weylsb/division.hpp"
#include "weylsb/format.hpp"
#include "weylsb/homogenize.hpp"
#include "weylsb/order.hpp"
#include "weylsb/random.hpp"

namespace weylsb {

std::size_t FuzzReport::total_failures() const {
  return std::accumulate(suites.begin(), suites.end(), std::size_t{0},
                         [](std::size_t acc, const SuiteOutcome& s) { return acc + s.failures; });
}

namespace {

// A case returns nullopt on success, a description on failure.
using Case = std::function<std::optional<std::string>(OperatorSampler&, std::size_t n)>;

SuiteOutcome run_suite(const std::string& name, const FuzzOptions& options, std::uint64_t salt,
                       const Case& body) {
  SuiteOutcome out;
  out.name = name;
  OperatorSampler sampler(options.seed * 0x9E3779B97F4A7C15ULL + salt);
  for (std::size_t c = 0; c < options.cases; ++c) {
    const std::size_t n = sampler.uniform(1, options.max_vars);
    ++out.cases;
    std::optional<std::string> failure;
    try {
      failure = body(sampler, n);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      if (out.failures == 0) out.first_counterexample = "case " + std::to_string(c) + ": " + *failure;
      ++out.failures;
    }
  }
  return out;
}

std::string show(const WeylOperator& p) { return format_operator(p); }
std::string show(const HomogOperator& h) { return format_operator(h); }

}  // namespace

FuzzReport algebra_fuzz(const FuzzOptions& options) {
  FuzzReport report;
  if (options.cases == 0) return report;
  const WeylProduct mul = options.product ? options.product : WeylProduct(mul_weyl);
  const std::uint64_t deg = options.max_degree;
  const std::size_t terms = options.max_terms;

  report.suites.push_back(run_suite("weyl associativity", options, 1, [&](OperatorSampler& s, std::size_t n)
      -> std::optional<std::string> {
    const auto p = s.weyl(n, deg, terms), q = s.weyl(n, deg, terms), r = s.weyl(n, deg, terms);
    if (mul(mul(p, q), r) == mul(p, mul(q, r))) return std::nullopt;
    return "P=" + show(p) + " Q=" + show(q) + " R=" + show(r);
  }));

  report.suites.push_back(run_suite("homog associativity", options, 2, [&](OperatorSampler& s, std::size_t n)
      -> std::optional<std::string> {
    const auto a = s.homog(n, deg, terms), b = s.homog(n, deg, terms), c = s.homog(n, deg, terms);
    if ((a * b) * c == a * (b * c)) return std::nullopt;
    return "H=" + show(a) + " G=" + show(b) + " K=" + show(c);
  }));

  report.suites.push_back(run_suite("t centrality", options, 3, [&](OperatorSampler& s, std::size_t n)
      -> std::optional<std::string> {
    const auto h = s.homog(n, deg, terms);
    const auto t = homog_t(n);
    if (t * h == h * t && t * h == multiply_by_t(h, 1)) return std::nullopt;
    return "H=" + show(h);
  }));

  report.suites.push_back(run_suite("action homomorphism", options, 4, [&](OperatorSampler& s, std::size_t n)
      -> std::optional<std::string> {
    const auto p = s.weyl(n, deg, terms), q = s.weyl(n, deg, terms);
    const auto f = s.polynomial(n, deg + 2, terms);
    if (apply(mul(p, q), f) == apply(p, apply(q, f))) return std::nullopt;
    return "P=" + show(p) + " Q=" + show(q);
  }));

  report.suites.push_back(run_suite("homogenization", options, 5, [&](OperatorSampler& s, std::size_t n)
      -> std::optional<std::string> {
    const auto p = s.nonzero_weyl(n, deg, terms), q = s.nonzero_weyl(n, deg, terms);
    if (!(dehomogenize(homogenize(p)) == p)) return "round trip fails for P=" + show(p);
    const auto pq = mul(p, q);
    if (pq.is_zero()) return "product of nonzero operators vanished: P=" + show(p) + " Q=" + show(q);
    if (homogenize(pq) == homogenize(p) * homogenize(q)) return std::nullopt;
    return "h(PQ) != h(P)h(Q) for P=" + show(p) + " Q=" + show(q);
  }));

  report.suites.push_back(run_suite("exponent additivity", options, 6, [&](OperatorSampler& s, std::size_t n)
      -> std::optional<std::string> {
    const OrderContext ctx(s.linear_form(n, 2), s.tiebreak(n));
    const auto p = s.nonzero_weyl(n, deg, terms), q = s.nonzero_weyl(n, deg, terms);
    const auto pq = mul(p, q);
    if (pq.is_zero()) return "product vanished";
    const auto lp = exp_delta(ctx, p), lq = exp_delta(ctx, q), lpq = exp_delta(ctx, pq);
    if (lpq.exponent == lp.exponent + lq.exponent && lpq.coefficient == lp.coefficient * lq.coefficient) {
      return std::nullopt;
    }
    return "exp(PQ) != exp(P)+exp(Q) for P=" + show(p) + " Q=" + show(q);
  }));

  report.suites.push_back(run_suite("division certificates", options, 7, [&](OperatorSampler& s, std::size_t n)
      -> std::optional<std::string> {
    const OrderContext ctx(s.linear_form(n, 2), s.tiebreak(n));
    std::vector<HomogOperator> divisors;
    const std::size_t count = s.uniform(1, 3);
    for (std::size_t i = 0; i < count; ++i) divisors.push_back(s.homogeneous(n, s.uniform(1, 3), terms));
    const auto h = s.homogeneous(n, deg, terms);
    const auto result = divide(ctx, h, divisors);
    if (auto bad = check_division(ctx, h, divisors, result)) return *bad + " for H=" + show(h);
    return std::nullopt;
  }));

  return report;
}

}  // namespace weylsb
