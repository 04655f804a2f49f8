#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylsb/order.hpp"
#include "weylsb/scalar.hpp"

namespace weylsb::cli {

/// Bad config file or flag value.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& message, const std::string& source = "");
  /// 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

enum class OutputFormat { text, json };

struct RunConfig {
  std::size_t n = 1;
  /// Empty p and q select the order form |beta|.
  std::vector<std::int64_t> p;
  std::vector<std::int64_t> q;
  MonomialOrder tiebreak = MonomialOrder::degrevlex;
  /// Variable names from smallest to largest, e.g. {"x1", "D1"}; empty for the default.
  std::vector<std::string> variable_order;
  Field field = Field::rational();
  std::uint64_t degree_cap = 64;
  OutputFormat output = OutputFormat::text;

  LinearForm linear_form() const;
  TieBreak tie_break() const;
  /// Validates everything; throws ConfigError.
  OrderContext context() const;
};

/// Flat `key = value` lines with `#` comments. Keys:
///   n, p, q, tiebreak, variable_order, field, degree_cap, output,
///   form ("order" | "v" | "bernstein"; sets p and q from n).
/// Values are integers, "strings" or [lists]. Unknown keys are errors.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

Field parse_field(const std::string& name);
OutputFormat parse_output(const std::string& name);

}  // namespace weylsb::cli
