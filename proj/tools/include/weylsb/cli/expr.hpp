#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "weylsb/operator.hpp"
#include "weylsb/scalar.hpp"

namespace weylsb::cli {

/// Syntax or name error in an operator expression. Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// Grammar, loosest binding first:
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*              left-associative, noncommutative
///   unary  := '-' unary | power
///   power  := atom ('^' natural)?
///   atom   := natural ('/' natural)? | x<i> | D<i> | d<i> | t | '(' expr ')'
/// Indices are 1-based and must not exceed n. `t` is accepted only by
/// parse_homog_operator. Coefficients are mapped into `field`.
WeylOperator parse_operator(const std::string& text, std::size_t n,
                            const Field& field = Field::rational(), std::size_t line = 1);
HomogOperator parse_homog_operator(const std::string& text, std::size_t n,
                                   const Field& field = Field::rational(), std::size_t line = 1);

/// Every coefficient of `op` mapped into `field`.
WeylOperator to_field(const WeylOperator& op, const Field& field);
HomogOperator to_field(const HomogOperator& op, const Field& field);

}  // namespace weylsb::cli
