#include "weylsb/cli/json_io.hpp"

#include <stdexcept>

namespace weylsb::cli {
namespace {

Json exponents(std::span<const Exponent> e) {
  Json a = Json::array();
  for (Exponent v : e) a.push_back(v);
  return a;
}

std::vector<Exponent> read_exponents(const Json& j, const char* key, std::size_t n) {
  if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != n) {
    throw std::invalid_argument(std::string("term needs '") + key + "' with " + std::to_string(n) + " entries");
  }
  std::vector<Exponent> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number_unsigned()) throw std::invalid_argument(std::string("'") + key + "' entries must be naturals");
    out.push_back(v.get<Exponent>());
  }
  return out;
}

Scalar read_coeff(const Json& term, const Field& field) {
  if (!term.contains("coeff") || !term.at("coeff").is_string()) {
    throw std::invalid_argument("term needs a string 'coeff'");
  }
  return field.parse(term.at("coeff").get<std::string>());
}

void check_array(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("operator must be a JSON array of terms");
}

}  // namespace

Json to_json(const MultiIndex& m) { return {{"alpha", exponents(m.alpha())}, {"beta", exponents(m.beta())}}; }

Json to_json(const HomogIndex& h) {
  return {{"k", h.k}, {"alpha", exponents(h.m.alpha())}, {"beta", exponents(h.m.beta())}};
}

Json to_json(const WeylOperator& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json term = to_json(m);
    term["coeff"] = c.to_string();
    out.push_back(std::move(term));
  }
  return out;
}

Json to_json(const HomogOperator& h) {
  Json out = Json::array();
  for (const auto& [m, c] : h.terms()) {
    Json term = to_json(m);
    term["coeff"] = c.to_string();
    out.push_back(std::move(term));
  }
  return out;
}

WeylOperator weyl_from_json(const Json& j, std::size_t n, const Field& field) {
  check_array(j);
  WeylOperator out(n);
  for (const auto& term : j) {
    if (term.contains("k") && term.at("k") != 0) throw std::invalid_argument("t-power in a Weyl operator");
    out.add_term(MultiIndex(read_exponents(term, "alpha", n), read_exponents(term, "beta", n)),
                 read_coeff(term, field));
  }
  return out;
}

HomogOperator homog_from_json(const Json& j, std::size_t n, const Field& field) {
  check_array(j);
  HomogOperator out(n);
  for (const auto& term : j) {
    Exponent k = 0;
    if (term.contains("k")) {
      if (!term.at("k").is_number_unsigned()) throw std::invalid_argument("'k' must be a natural");
      k = term.at("k").get<Exponent>();
    }
    out.add_term(HomogIndex(k, MultiIndex(read_exponents(term, "alpha", n), read_exponents(term, "beta", n))),
                 read_coeff(term, field));
  }
  return out;
}

Json to_json(const StandardBasisReport& report) {
  Json out;
  Json homog = Json::array(), delta = Json::array(), symbols = Json::array(), stairs = Json::array();
  for (const auto& g : report.homog_basis) homog.push_back(to_json(g));
  for (const auto& p : report.delta_basis) delta.push_back(to_json(p));
  for (const auto& s : report.symbols) symbols.push_back(to_json(s));
  for (const auto& m : report.staircase) stairs.push_back(to_json(m));
  out["homog_basis"] = std::move(homog);
  out["delta_basis"] = std::move(delta);
  out["symbols"] = std::move(symbols);
  out["staircase"] = std::move(stairs);
  out["stats"] = {{"pairs_processed", report.stats.pairs_processed},
                  {"reductions_to_zero", report.stats.reductions_to_zero},
                  {"max_degree", report.stats.max_degree}};
  return out;
}

}  // namespace weylsb::cli
