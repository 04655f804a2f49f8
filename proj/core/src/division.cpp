#include "weylsb/division.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace weylsb {

std::optional<std::size_t> DeltaPartition::region(const HomogIndex& e) const {
  for (std::size_t i = 0; i < corners_.size(); ++i) {
    if (corners_[i].divides(e)) return i;
  }
  return std::nullopt;
}

DivisionResult divide(const OrderContext& ctx, const HomogOperator& h,
                      std::span<const HomogOperator> divisors) {
  const std::size_t n = h.nvars();
  std::vector<LeadingData<HomogIndex>> lead;
  lead.reserve(divisors.size());
  for (const auto& p : divisors) {
    if (p.is_zero()) throw std::invalid_argument("zero divisor");
    h.check_compatible(p);
    lead.push_back(exp_homog(ctx, p));
  }
  std::vector<HomogIndex> corners;
  for (const auto& l : lead) corners.push_back(l.exponent);
  const DeltaPartition partition(std::move(corners));

  DivisionResult result{std::vector<HomogOperator>(divisors.size(), HomogOperator(n)),
                        HomogOperator(n)};

  // Running operator, kept prec_L-descending so begin() is the leading term.
  std::map<HomogIndex, Scalar, LGreater> running(LGreater{&ctx});
  for (const auto& [idx, c] : h.terms()) running.emplace(idx, c);

  while (!running.empty()) {
    auto top = running.begin();
    const HomogIndex e = top->first;
    const Scalar c = top->second;
    const auto i = partition.region(e);
    if (!i) {
      result.remainder.add_term(e, c);
      running.erase(top);
      continue;
    }
    const Scalar factor = c / lead[*i].coefficient;
    const HomogOperator shift = HomogOperator::monomial(e - lead[*i].exponent, factor);
    result.quotients[*i].add_term(e - lead[*i].exponent, factor);
    const HomogOperator multiple = shift * divisors[*i];
    for (const auto& [idx, pc] : multiple.terms()) {
      auto [it, inserted] = running.try_emplace(idx, -pc);
      if (!inserted) {
        it->second -= pc;
        if (it->second.is_zero()) running.erase(it);
      }
    }
    if (!running.empty() && running.begin()->first == e) {
      throw std::logic_error("division step failed to cancel the leading term");
    }
  }
  return result;
}

bool reduces_to_zero(const OrderContext& ctx, const HomogOperator& h,
                     std::span<const HomogOperator> divisors) {
  return divide(ctx, h, divisors).remainder.is_zero();
}

std::optional<std::string> check_division(const OrderContext& ctx, const HomogOperator& h,
                                          std::span<const HomogOperator> divisors,
                                          const DivisionResult& result) {
  if (result.quotients.size() != divisors.size()) return "quotient count differs from divisor count";
  std::vector<HomogIndex> corners;
  for (const auto& p : divisors) corners.push_back(exp_homog(ctx, p).exponent);
  const DeltaPartition partition(corners);

  HomogOperator rebuilt = result.remainder;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    rebuilt += result.quotients[i] * divisors[i];
    for (const auto& [idx, c] : result.quotients[i].terms()) {
      const auto r = partition.region(corners[i] + idx);
      if (!r || *r != i) {
        std::ostringstream os;
        os << "quotient " << i << " term " << idx << " leaves Delta_" << i;
        return os.str();
      }
    }
  }
  if (!(rebuilt == h)) return "H != sum Q_i P_i + R";
  for (const auto& [idx, c] : result.remainder.terms()) {
    if (partition.region(idx)) {
      std::ostringstream os;
      os << "remainder term " << idx << " lies in Delta_" << *partition.region(idx);
      return os.str();
    }
  }
  return std::nullopt;
}

}  // namespace weylsb
