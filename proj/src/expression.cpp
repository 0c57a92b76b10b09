#include "jacnewton/expression.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace jacnewton {
namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(const std::string& text, const std::optional<std::vector<std::string>>& variables)
      : text_(text), fixed_(variables.has_value()) {
    if (variables)
      for (const auto& v : *variables) {
        if (v.empty() || !is_name_start(v.front()) || !std::all_of(v.begin(), v.end(), is_name_char))
          throw ParseError(1, "invalid variable name '" + v + "'");
        if (index_.count(v)) throw ParseError(1, "variable '" + v + "' listed twice");
        index_.emplace(v, names_.size());
        names_.push_back(v);
      }
  }

  InputSpec run() {
    skip_ws();
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    term(negative);
    for (skip_ws(); !at_end(); skip_ws()) {
      const char c = peek();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'");
      get();
      skip_ws();
      term(c == '-');
    }

    std::map<IntVec, Rat, IntVecLess> merged;
    for (auto& [pos, exps, coeff] : terms_) {
      exps.resize(names_.size(), Int(0));
      if (std::all_of(exps.begin(), exps.end(), [](const Int& e) { return e == 0; }))
        throw ParseError(pos, "constant term: the series must vanish at the origin");
      merged[exps] += coeff;
    }
    InputSpec spec;
    spec.variables = names_;
    for (const auto& [exps, coeff] : merged) {
      if (coeff == 0) continue;
      spec.support.push_back(exps);
      spec.coefficients.push_back(coeff);
    }
    if (spec.support.empty()) throw ParseError(1, "all terms cancel");
    return spec;
  }

 private:
  struct Term {
    std::size_t position;
    IntVec exponents;
    Rat coeff;
  };

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  std::size_t column() const { return pos_ + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(column(), msg); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void term(bool negative) {
    Term t{column(), IntVec(names_.size(), Int(0)), Rat(negative ? -1 : 1)};
    if (!at_end() && is_digit(peek())) {
      std::string num = digits();
      if (!at_end() && peek() == '/') {
        get();
        const std::size_t den_col = column();
        const std::string den = digits();
        if (den.empty()) fail("expected a denominator");
        if (Int(den) == 0) throw ParseError(den_col, "zero denominator");
        num += "/" + den;
      }
      t.coeff *= parse_rational(num);
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        skip_ws();
        if (at_end() || !is_name_start(peek())) fail("expected a variable after '*'");
      }
    } else if (at_end() || !is_name_start(peek())) {
      fail(at_end() ? "expected a term" : std::string("unexpected character '") + peek() + "'");
    }
    while (!at_end() && is_name_start(peek())) {
      factor(t);
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        skip_ws();
        if (at_end() || !is_name_start(peek())) fail("expected a variable after '*'");
      }
    }
    terms_.push_back(std::move(t));
  }

  void factor(Term& t) {
    const std::size_t start = pos_;
    while (!at_end() && is_name_char(peek())) ++pos_;
    const std::string name = text_.substr(start, pos_ - start);
    auto it = index_.find(name);
    if (it == index_.end()) {
      if (fixed_) throw ParseError(start + 1, "unknown variable '" + name + "'");
      it = index_.emplace(name, names_.size()).first;
      names_.push_back(name);
      for (auto& other : terms_) other.exponents.resize(names_.size(), Int(0));
    }
    t.exponents.resize(names_.size(), Int(0));
    Int e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      get();
      skip_ws();
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        if (peek() == '-') fail("negative exponent");
        fail("signed exponent");
      }
      const std::string d = digits();
      if (d.empty()) fail("expected a nonnegative integer exponent");
      if (!at_end() && (peek() == '/' || peek() == '.')) fail("fractional exponent");
      e = Int(d);
    }
    t.exponents[it->second] += e;
  }

  const std::string& text_;
  bool fixed_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<Term> terms_;
};

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("at position " + std::to_string(position) + ": " + message), position_(position) {}

InputSpec parse_expression(const std::string& text, const std::optional<std::vector<std::string>>& variables) {
  return Parser(text, variables).run();
}

std::string format_expression(const InputSpec& spec) {
  std::string out;
  for (std::size_t k = spec.support.size(); k-- > 0;) {
    const IntVec& p = spec.support[k];
    Rat c = spec.coefficients.empty() ? Rat(1) : spec.coefficients[k];
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    bool first = true;
    if (c != 1) {
      out += to_string(c);
      first = false;
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0) continue;
      if (!first) out += "*";
      first = false;
      out += spec.variables[i];
      if (p[i] != 1) out += "^" + to_string(p[i]);
    }
  }
  return out;
}

}  // namespace jacnewton
