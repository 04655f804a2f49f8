#include "weylsb/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "weylsb/homogenize.hpp"

namespace weylsb {
namespace {

void enumerate(std::size_t slot, std::uint64_t remaining, std::vector<Exponent>& cur,
               std::vector<std::vector<Exponent>>& out) {
  if (slot + 1 == cur.size()) {
    cur[slot] = static_cast<Exponent>(remaining);
    out.push_back(cur);
    return;
  }
  for (std::uint64_t e = 0; e <= remaining; ++e) {
    cur[slot] = static_cast<Exponent>(e);
    enumerate(slot + 1, remaining - e, cur, out);
  }
}

using Row = std::map<HomogIndex, Scalar, LGreater>;

}  // namespace

std::vector<HomogIndex> homog_monomials_of_degree(std::size_t n, std::uint64_t d) {
  std::vector<std::vector<Exponent>> raw;
  std::vector<Exponent> cur(2 * n + 1, 0);
  enumerate(0, d, cur, raw);
  std::vector<HomogIndex> out;
  out.reserve(raw.size());
  for (const auto& r : raw) {
    HomogIndex h(n);
    h.k = r[0];
    for (std::size_t s = 0; s < 2 * n; ++s) h.m.slot(s) = r[s + 1];
    out.push_back(std::move(h));
  }
  return out;
}

TruncationWitness truncated_exponents(const OrderContext& ctx, std::span<const WeylOperator> gens,
                                      std::uint64_t d, const OracleOptions& options) {
  std::vector<HomogOperator> hg;
  std::vector<std::uint64_t> degree;
  for (const auto& p : gens) {
    if (p.is_zero()) throw std::invalid_argument("oracle generator is zero");
    hg.push_back(homogenize(p));
    degree.push_back(static_cast<std::uint64_t>(total_order(p).value()));
  }
  if (hg.empty()) throw std::invalid_argument("oracle needs at least one generator");
  const std::size_t n = hg.front().nvars();
  if (d < *std::max_element(degree.begin(), degree.end())) {
    throw std::invalid_argument("degree bound below the largest generator degree");
  }

  std::size_t rows = 0;
  for (std::size_t i = 0; i < hg.size(); ++i) {
    for (std::uint64_t e = degree[i]; e <= d; ++e) {
      rows += homog_monomials_of_degree(n, e - degree[i]).size();
      if (rows > options.max_rows) {
        throw OracleTooLarge("oracle system exceeds " + std::to_string(options.max_rows) + " rows");
      }
    }
  }

  TruncationWitness witness;
  witness.degree_bound = d;
  const LGreater greater{&ctx};
  for (std::uint64_t e = 0; e <= d; ++e) {
    // Echelon rows of this degree, keyed by pivot column.
    std::map<HomogIndex, Row> pivots;
    for (std::size_t i = 0; i < hg.size(); ++i) {
      if (degree[i] > e) continue;
      for (const auto& shift : homog_monomials_of_degree(n, e - degree[i])) {
        Row row(greater);
        const HomogOperator multiple = HomogOperator::monomial(shift) * hg[i];
        for (const auto& [idx, c] : multiple.terms()) {
          row.emplace(idx, c);
        }
        while (!row.empty()) {
          const auto lead = row.begin();
          auto pivot = pivots.find(lead->first);
          if (pivot == pivots.end()) {
            const Scalar inv = lead->second.inverse();
            for (auto& [idx, c] : row) c *= inv;
            pivots.emplace(lead->first, std::move(row));
            break;
          }
          const Scalar factor = lead->second;
          for (const auto& [idx, c] : pivot->second) {
            auto [it, inserted] = row.try_emplace(idx, -(factor * c));
            if (!inserted) {
              it->second -= factor * c;
              if (it->second.is_zero()) row.erase(it);
            }
          }
        }
      }
    }
    for (const auto& [col, row] : pivots) witness.leading_exponents.insert(col);
    witness.matrix_rank += pivots.size();
  }
  return witness;
}

std::set<MultiIndex> staircase_oracle(const OrderContext& ctx, std::span<const WeylOperator> gens,
                                      std::uint64_t d, const OracleOptions& options) {
  std::set<MultiIndex> out;
  for (const auto& e : truncated_exponents(ctx, gens, d, options).leading_exponents) {
    out.insert(project(e));
  }
  return out;
}

OracleAgreement compare_with_pipeline(const OrderContext& ctx, const StandardBasisReport& report,
                                      const TruncationWitness& witness) {
  OracleAgreement result;
  const std::uint64_t d = witness.degree_bound;
  std::uint64_t max_gen = 0;
  for (const auto& g : report.homog_generators) {
    max_gen = std::max(max_gen, exp_homog(ctx, g).exponent.degree());
  }
  result.window = d >= max_gen ? d - max_gen : 0;
  const std::size_t n = report.homog_generators.empty() ? 1 : report.homog_generators.front().nvars();

  auto fail = [&](const std::string& what) {
    result.agree = false;
    result.discrepancies.push_back(what);
  };

  std::vector<HomogIndex> corners;
  std::map<MultiIndex, std::uint64_t> source_degree;
  for (const auto& g : report.homog_basis) {
    const HomogIndex e = exp_homog(ctx, g).exponent;
    corners.push_back(e);
    auto [it, inserted] = source_degree.try_emplace(e.m, e.degree());
    if (!inserted) it->second = std::min(it->second, e.degree());
  }

  // N^{2n+1}: exact equality on the truncation.
  for (std::uint64_t e = 0; e <= d; ++e) {
    for (const auto& mono : homog_monomials_of_degree(n, e)) {
      const bool in_pipeline = std::any_of(corners.begin(), corners.end(),
                                           [&](const HomogIndex& c) { return c.divides(mono); });
      const bool in_oracle = witness.leading_exponents.count(mono) > 0;
      if (in_pipeline != in_oracle) {
        std::ostringstream os;
        os << "exponent " << mono << (in_pipeline ? " only in pipeline" : " only in oracle");
        fail(os.str());
      }
    }
  }

  // N^{2n}: projected comparison inside the window.
  std::vector<MultiIndex> projected;
  for (const auto& e : witness.leading_exponents) projected.push_back(project(e));
  result.oracle_staircase = minimal_staircase(projected);
  for (const auto& s : report.staircase) {
    auto it = source_degree.find(s);
    if (it != source_degree.end() && it->second <= result.window &&
        std::find(projected.begin(), projected.end(), s) == projected.end()) {
      std::ostringstream os;
      os << "staircase element " << s << " missing from the oracle";
      fail(os.str());
    }
  }
  for (const auto& e : witness.leading_exponents) {
    if (e.degree() <= result.window && !in_upper_set(report.staircase, e.m)) {
      std::ostringstream os;
      os << "oracle exponent " << e << " lies outside the pipeline staircase";
      fail(os.str());
    }
  }

  result.full_window = std::all_of(corners.begin(), corners.end(), [&](const HomogIndex& c) {
    return c.degree() <= result.window;
  });
  if (result.full_window && result.oracle_staircase != report.staircase) {
    fail("minimal staircases differ");
  }
  return result;
}

}  // namespace weylsb
