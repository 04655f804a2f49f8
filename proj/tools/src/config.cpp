#include "weylsb/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace weylsb::cli {

ConfigError::ConfigError(std::size_t line, const std::string& message, const std::string& source)
    : std::runtime_error((source.empty() ? "" : source + ": ") +
                         (line == 0 ? "" : "line " + std::to_string(line) + ": ") + message),
      line_(line),
      detail_(message) {}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Drops a trailing comment, ignoring '#' inside quotes.
std::string strip_comment(const std::string& s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

std::int64_t parse_int(const std::string& raw, std::size_t line) {
  const std::string s = trim(raw);
  std::int64_t v = 0;
  const char* begin = s.data() + (!s.empty() && s[0] == '+' ? 1 : 0);
  const auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError(line, "expected an integer, got '" + s + "'");
  }
  return v;
}

std::string parse_string(const std::string& raw, std::size_t line) {
  const std::string s = trim(raw);
  if (s.size() < 2 || s.front() != '"' || s.back() != '"') {
    throw ConfigError(line, "expected a quoted string, got '" + s + "'");
  }
  return s.substr(1, s.size() - 2);
}

std::vector<std::string> list_items(const std::string& raw, std::size_t line) {
  const std::string s = trim(raw);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw ConfigError(line, "expected a [list], got '" + s + "'");
  }
  std::vector<std::string> items;
  const std::string body = trim(s.substr(1, s.size() - 2));
  if (body.empty()) return items;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) items.push_back(trim(item));
  return items;
}

}  // namespace

Field parse_field(const std::string& name) {
  if (name == "rational" || name == "Q") return Field::rational();
  if (name.size() > 4 && name.rfind("fp(", 0) == 0 && name.back() == ')') {
    const std::string digits = name.substr(3, name.size() - 4);
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ConfigError(0, "bad prime in field '" + name + "'");
    }
    try {
      return Field::prime(p);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(0, std::string("field ") + name + ": " + e.what());
    }
  }
  throw ConfigError(0, "unknown field '" + name + "' (use \"rational\" or \"fp(p)\")");
}

OutputFormat parse_output(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  throw ConfigError(0, "unknown output format '" + name + "'");
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::string form;
  std::size_t form_line = 0;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(strip_comment(raw));
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    try {
      if (key == "n") {
        const auto v = parse_int(value, line);
        if (v < 1) throw ConfigError(line, "n must be at least 1");
        cfg.n = static_cast<std::size_t>(v);
      } else if (key == "p" || key == "q") {
        auto& target = key == "p" ? cfg.p : cfg.q;
        target.clear();
        for (const auto& item : list_items(value, line)) target.push_back(parse_int(item, line));
      } else if (key == "tiebreak") {
        cfg.tiebreak = parse_monomial_order(parse_string(value, line));
      } else if (key == "variable_order") {
        cfg.variable_order.clear();
        for (const auto& item : list_items(value, line)) cfg.variable_order.push_back(parse_string(item, line));
      } else if (key == "field") {
        cfg.field = parse_field(parse_string(value, line));
      } else if (key == "degree_cap") {
        const auto v = parse_int(value, line);
        if (v < 0) throw ConfigError(line, "degree_cap must be nonnegative");
        cfg.degree_cap = static_cast<std::uint64_t>(v);
      } else if (key == "output") {
        cfg.output = parse_output(parse_string(value, line));
      } else if (key == "form") {
        form = parse_string(value, line);
        form_line = line;
      } else {
        throw ConfigError(line, "unknown key '" + key + "'");
      }
    } catch (const ConfigError& e) {
      if (e.line() != 0) throw;
      throw ConfigError(line, e.detail());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(line, e.what());
    }
  }
  if (!form.empty()) {
    if (!cfg.p.empty() || !cfg.q.empty()) throw ConfigError(form_line, "form conflicts with explicit p/q");
    LinearForm f = LinearForm::order_form(cfg.n);
    if (form == "v") {
      f = LinearForm::v_form(cfg.n);
    } else if (form == "bernstein") {
      f = LinearForm::bernstein(cfg.n);
    } else if (form != "order") {
      throw ConfigError(form_line, "unknown form '" + form + "' (use order, v or bernstein)");
    }
    cfg.p = f.p();
    cfg.q = f.q();
  }
  cfg.context();  // validate eagerly
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(e.line(), e.detail(), path);
  }
}

LinearForm RunConfig::linear_form() const {
  if (p.empty() && q.empty()) return LinearForm::order_form(n);
  if (p.size() != n || q.size() != n) {
    throw ConfigError(0, "p and q need exactly n = " + std::to_string(n) + " entries");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] + q[i] < 0) {
      throw ConfigError(0, "weights violate p_i + q_i >= 0 at i = " + std::to_string(i + 1));
    }
  }
  return LinearForm(p, q);
}

TieBreak RunConfig::tie_break() const {
  if (variable_order.empty()) return TieBreak(n, tiebreak);
  if (variable_order.size() != 2 * n) {
    throw ConfigError(0, "variable_order needs all " + std::to_string(2 * n) + " variables");
  }
  std::vector<std::size_t> slots;
  for (const auto& name : variable_order) {
    if (name.size() < 2 || (name[0] != 'x' && name[0] != 'D' && name[0] != 'd')) {
      throw ConfigError(0, "bad variable name '" + name + "' in variable_order");
    }
    std::size_t i = 0;
    const auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), i);
    if (ec != std::errc() || ptr != name.data() + name.size() || i == 0 || i > n) {
      throw ConfigError(0, "bad variable name '" + name + "' in variable_order");
    }
    slots.push_back(name[0] == 'x' ? i - 1 : n + i - 1);
  }
  try {
    return TieBreak(tiebreak, slots);
  } catch (const std::invalid_argument&) {
    throw ConfigError(0, "variable_order must list every variable exactly once");
  }
}

OrderContext RunConfig::context() const { return OrderContext(linear_form(), tie_break()); }

}  // namespace weylsb::cli
