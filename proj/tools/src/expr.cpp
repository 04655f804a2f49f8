#include "weylsb/cli/expr.hpp"

#include <cctype>
#include <limits>

namespace weylsb::cli {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

template <class Op>
struct Algebra;

template <>
struct Algebra<WeylOperator> {
  static constexpr bool has_t = false;
  static WeylOperator constant(std::size_t n, const Scalar& c) { return weyl_constant(n, c); }
  static WeylOperator x(std::size_t n, std::size_t i) { return weyl_x(n, i); }
  static WeylOperator d(std::size_t n, std::size_t i) { return weyl_d(n, i); }
  static WeylOperator t(std::size_t) { return {}; }
};

template <>
struct Algebra<HomogOperator> {
  static constexpr bool has_t = true;
  static HomogOperator constant(std::size_t n, const Scalar& c) { return homog_constant(n, c); }
  static HomogOperator x(std::size_t n, std::size_t i) { return homog_x(n, i); }
  static HomogOperator d(std::size_t n, std::size_t i) { return homog_d(n, i); }
  static HomogOperator t(std::size_t n) { return homog_t(n); }
};

template <class Op>
class Parser {
 public:
  Parser(const std::string& text, std::size_t n, const Field& field, std::size_t line)
      : text_(text), n_(n), field_(field), line_(line) {}

  Op parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Op result = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return result;
  }

 private:
  using A = Algebra<Op>;

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(line_, pos + 1, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Op expr() {
    Op acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Op term() {
    Op acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Op unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Op power() {
    Op base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    const mpz_class e = natural();
    if (!e.fits_ulong_p() || e > 10000) fail_at(at, "exponent too large");
    Op result = A::constant(n_, Scalar(1));
    for (unsigned long i = 0; i < e.get_ui(); ++i) result = result * base;
    return result;
  }

  mpz_class natural() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return mpz_class(text_.substr(start, pos_ - start));
  }

  std::size_t index(std::size_t symbol_start) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail_at(symbol_start, "variable needs an index, e.g. x1");
    const std::string digits = text_.substr(start, pos_ - start);
    if (digits.size() > 9) fail_at(symbol_start, "index out of range");
    const std::size_t i = std::stoul(digits);
    if (i == 0 || i > n_) {
      fail_at(symbol_start, "index out of range: " + text_.substr(symbol_start, pos_ - symbol_start) +
                                " with n = " + std::to_string(n_));
    }
    return i - 1;
  }

  Op atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Op inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(natural());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        const mpz_class den = natural();
        if (den == 0) fail_at(at, "zero denominator");
        value /= mpq_class(den);
      }
      return A::constant(n_, field_.from_rational(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      std::size_t end = pos_;
      while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
      const std::string name = text_.substr(start, end - start);
      pos_ = end;
      if (name == "x") return A::x(n_, index(start));
      if (name == "D" || name == "d") return A::d(n_, index(start));
      if (name == "t" && A::has_t) return A::t(n_);
      fail_at(start, "unknown symbol '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& text_;
  std::size_t n_;
  const Field& field_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

template <class Op>
Op convert(const Op& op, const Field& field) {
  Op out(op.nvars());
  for (const auto& [idx, c] : op.terms()) out.add_term(idx, field.convert(c));
  return out;
}

}  // namespace

WeylOperator to_field(const WeylOperator& op, const Field& field) { return convert(op, field); }
HomogOperator to_field(const HomogOperator& op, const Field& field) { return convert(op, field); }

WeylOperator parse_operator(const std::string& text, std::size_t n, const Field& field,
                            std::size_t line) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  return to_field(Parser<WeylOperator>(text, n, field, line).parse(), field);
}

HomogOperator parse_homog_operator(const std::string& text, std::size_t n, const Field& field,
                                   std::size_t line) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  return to_field(Parser<HomogOperator>(text, n, field, line).parse(), field);
}

}  // namespace weylsb::cli
