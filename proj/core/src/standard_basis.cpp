#include "weylsb/standard_basis.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "weylsb/division.hpp"
#include "weylsb/homogenize.hpp"

namespace weylsb {

DegreeCapReached::DegreeCapReached(std::uint64_t degree, std::uint64_t cap)
    : std::runtime_error("degree cap reached: an S-pair of degree " + std::to_string(degree) +
                         " exceeds the cap " + std::to_string(cap)),
      degree_(degree),
      cap_(cap) {}

HomogOperator semisyzygy(const OrderContext& ctx, const HomogOperator& h1, const HomogOperator& h2) {
  if (h1.is_zero() || h2.is_zero()) throw std::invalid_argument("semisyzygy of zero");
  h1.check_compatible(h2);
  const auto l1 = exp_homog(ctx, h1);
  const auto l2 = exp_homog(ctx, h2);
  const HomogIndex top = lcm(l1.exponent, l2.exponent);
  const HomogOperator m1 = HomogOperator::monomial(top - l1.exponent, l2.coefficient);
  const HomogOperator m2 = HomogOperator::monomial(top - l2.exponent, l1.coefficient);
  return m1 * h1 - m2 * h2;
}

namespace {

using Cofactors = std::vector<HomogOperator>;

struct QueueItem {
  std::uint64_t degree;
  std::uint64_t seq;
  std::size_t i;
  std::optional<std::size_t> j;  // empty: input generator i

  bool operator>(const QueueItem& o) const {
    return degree != o.degree ? degree > o.degree : seq > o.seq;
  }
};

Cofactors zero_cofactors(std::size_t count, std::size_t n) {
  return Cofactors(count, HomogOperator(n));
}

// c - sum Q_k C_k
Cofactors subtract_quotients(Cofactors c, const DivisionResult& div,
                             std::span<const Cofactors> basis_cofactors,
                             std::span<const std::size_t> which) {
  for (std::size_t q = 0; q < div.quotients.size(); ++q) {
    if (div.quotients[q].is_zero()) continue;
    const Cofactors& src = basis_cofactors[which[q]];
    for (std::size_t g = 0; g < c.size(); ++g) {
      if (!src[g].is_zero()) c[g] -= div.quotients[q] * src[g];
    }
  }
  return c;
}

class Completer {
 public:
  Completer(const OrderContext& ctx, std::span<const HomogOperator> gens,
            const CompletionOptions& options)
      : ctx_(ctx), gens_(gens), options_(options), n_(gens.empty() ? 1 : gens.front().nvars()) {}

  Completion run() {
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      if (gens_[g].is_zero()) throw std::invalid_argument("zero generator");
      gens_[g].check_compatible(gens_.front());
      push({exp_homog(ctx_, gens_[g]).exponent.degree(), 0, g, std::nullopt});
    }
    while (!queue_.empty()) {
      const QueueItem item = queue_.top();
      queue_.pop();
      process(item);
    }
    if (options_.interreduce) interreduce();
    sort_by_leading_exponent();
    if (options_.self_check) {
      if (auto bad = find_nonreducing_pair(ctx_, basis_)) {
        throw InvariantViolation("semisyzygy (" + std::to_string(bad->first) + ", " +
                                 std::to_string(bad->second) + ") of the completed basis "
                                 "does not reduce to zero");
      }
    }
    Completion out;
    out.basis = std::move(basis_);
    if (options_.track_cofactors) out.cofactors = std::move(cofactors_);
    out.stats = stats_;
    return out;
  }

 private:
  void push(QueueItem item) {
    item.seq = seq_++;
    queue_.push(item);
  }

  void process(const QueueItem& item) {
    if (item.degree > options_.degree_cap) throw DegreeCapReached(item.degree, options_.degree_cap);
    stats_.max_degree = std::max(stats_.max_degree, item.degree);

    HomogOperator s(n_);
    Cofactors cof;
    if (!item.j) {
      s = gens_[item.i];
      if (options_.track_cofactors) {
        cof = zero_cofactors(gens_.size(), n_);
        cof[item.i] = homog_constant(n_, Scalar(1));
      }
    } else {
      ++stats_.pairs_processed;
      const HomogOperator& a = basis_[item.i];
      const HomogOperator& b = basis_[*item.j];
      s = semisyzygy(ctx_, a, b);
      if (options_.track_cofactors) {
        const auto la = exp_homog(ctx_, a);
        const auto lb = exp_homog(ctx_, b);
        const HomogIndex top = lcm(la.exponent, lb.exponent);
        const HomogOperator ma = HomogOperator::monomial(top - la.exponent, lb.coefficient);
        const HomogOperator mb = HomogOperator::monomial(top - lb.exponent, la.coefficient);
        cof = zero_cofactors(gens_.size(), n_);
        for (std::size_t g = 0; g < gens_.size(); ++g) {
          cof[g] = ma * cofactors_[item.i][g] - mb * cofactors_[*item.j][g];
        }
      }
    }

    if (s.is_zero()) {
      if (item.j) ++stats_.reductions_to_zero;
      return;
    }
    const DivisionResult div = divide(ctx_, s, basis_);
    if (div.remainder.is_zero()) {
      if (item.j) ++stats_.reductions_to_zero;
      return;
    }
    HomogOperator r = div.remainder;
    const Scalar inv = exp_homog(ctx_, r).coefficient.inverse();
    r *= inv;
    if (options_.track_cofactors) {
      std::vector<std::size_t> all(basis_.size());
      std::iota(all.begin(), all.end(), std::size_t{0});
      cof = subtract_quotients(std::move(cof), div, cofactors_, all);
      for (auto& c : cof) c *= inv;
      cofactors_.push_back(std::move(cof));
    }
    add(std::move(r));
  }

  void add(HomogOperator g) {
    const HomogIndex e = exp_homog(ctx_, g).exponent;
    const std::size_t s = basis_.size();
    basis_.push_back(std::move(g));
    for (std::size_t k = 0; k < s; ++k) {
      const HomogIndex ek = exp_homog(ctx_, basis_[k]).exponent;
      push({lcm(ek, e).degree(), 0, k, s});
    }
  }

  void interreduce() {
    const std::size_t count = basis_.size();
    std::vector<HomogIndex> lead(count);
    for (std::size_t i = 0; i < count; ++i) lead[i] = exp_homog(ctx_, basis_[i]).exponent;

    std::vector<std::size_t> survivors;
    for (std::size_t i = 0; i < count; ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < count && !redundant; ++j) {
        if (j == i || !lead[j].divides(lead[i])) continue;
        redundant = lead[j] != lead[i] || j < i;
      }
      if (!redundant) survivors.push_back(i);
    }

    // Tail-reduce each survivor against the other survivors in their current form.
    for (std::size_t a = 0; a < survivors.size(); ++a) {
      std::vector<HomogOperator> others;
      std::vector<std::size_t> which;
      for (std::size_t b = 0; b < survivors.size(); ++b) {
        if (b == a) continue;
        others.push_back(basis_[survivors[b]]);
        which.push_back(survivors[b]);
      }
      const std::size_t i = survivors[a];
      const DivisionResult div = divide(ctx_, basis_[i], others);
      if (options_.track_cofactors) {
        cofactors_[i] = subtract_quotients(cofactors_[i], div, cofactors_, which);
      }
      basis_[i] = div.remainder;
    }

    std::vector<HomogOperator> kept;
    std::vector<Cofactors> kept_cof;
    for (std::size_t i : survivors) {
      kept.push_back(std::move(basis_[i]));
      if (options_.track_cofactors) kept_cof.push_back(std::move(cofactors_[i]));
    }
    basis_ = std::move(kept);
    cofactors_ = std::move(kept_cof);
  }

  void sort_by_leading_exponent() {
    std::vector<std::size_t> perm(basis_.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<HomogIndex> lead;
    for (const auto& g : basis_) lead.push_back(exp_homog(ctx_, g).exponent);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return ctx_.compare_L(lead[a], lead[b]) < 0;
    });
    std::vector<HomogOperator> sorted;
    std::vector<Cofactors> sorted_cof;
    for (std::size_t i : perm) {
      sorted.push_back(std::move(basis_[i]));
      if (options_.track_cofactors) sorted_cof.push_back(std::move(cofactors_[i]));
    }
    basis_ = std::move(sorted);
    cofactors_ = std::move(sorted_cof);
  }

  const OrderContext& ctx_;
  std::span<const HomogOperator> gens_;
  CompletionOptions options_;
  std::size_t n_;
  std::vector<HomogOperator> basis_;
  std::vector<Cofactors> cofactors_;
  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> queue_;
  std::uint64_t seq_ = 0;
  CompletionStats stats_;
};

}  // namespace

Completion buchberger(const OrderContext& ctx, std::span<const HomogOperator> gens,
                      const CompletionOptions& options) {
  if (gens.empty()) return {};
  return Completer(ctx, gens, options).run();
}

std::optional<std::pair<std::size_t, std::size_t>> find_nonreducing_pair(
    const OrderContext& ctx, std::span<const HomogOperator> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!reduces_to_zero(ctx, semisyzygy(ctx, basis[i], basis[j]), basis)) {
        return std::pair{i, j};
      }
    }
  }
  return std::nullopt;
}

std::vector<MultiIndex> minimal_staircase(std::span<const MultiIndex> exponents) {
  std::vector<MultiIndex> sorted(exponents.begin(), exponents.end());
  std::sort(sorted.begin(), sorted.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<MultiIndex> out;
  for (const auto& e : sorted) {
    if (!in_upper_set(out, e)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_upper_set(std::span<const MultiIndex> staircase, const MultiIndex& e) {
  return std::any_of(staircase.begin(), staircase.end(),
                     [&](const MultiIndex& s) { return s.divides(e); });
}

StandardBasisReport std_basis_pipeline(const OrderContext& ctx, std::span<const WeylOperator> gens,
                                       const CompletionOptions& options) {
  StandardBasisReport report;
  for (const auto& p : gens) {
    if (!p.is_zero()) report.homog_generators.push_back(homogenize(p));
  }
  if (report.homog_generators.empty()) throw std::domain_error("zero ideal");

  Completion completion = buchberger(ctx, report.homog_generators, options);
  report.homog_basis = std::move(completion.basis);
  report.cofactors = std::move(completion.cofactors);
  report.stats = completion.stats;

  std::vector<MultiIndex> exps;
  for (const auto& g : report.homog_basis) {
    report.delta_basis.push_back(dehomogenize(g));
    report.symbols.push_back(symbol(ctx, report.delta_basis.back()));
    exps.push_back(project(exp_homog(ctx, g).exponent));
  }
  report.staircase = minimal_staircase(exps);
  return report;
}

}  // namespace weylsb
