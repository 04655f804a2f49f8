#pragma once

#include <json.hpp>

#include "weylsb/operator.hpp"
#include "weylsb/scalar.hpp"
#include "weylsb/standard_basis.hpp"

namespace weylsb::cli {

using Json = nlohmann::ordered_json;

/// Operators as arrays of {"alpha": [...], "beta": [...], "coeff": "num/den"},
/// with an extra "k" for homogenized operators. Coefficients are exact strings.
Json to_json(const WeylOperator& p);
Json to_json(const HomogOperator& h);
Json to_json(const MultiIndex& m);
Json to_json(const HomogIndex& h);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
WeylOperator weyl_from_json(const Json& j, std::size_t n, const Field& field = Field::rational());
HomogOperator homog_from_json(const Json& j, std::size_t n, const Field& field = Field::rational());

Json to_json(const StandardBasisReport& report);

}  // namespace weylsb::cli
