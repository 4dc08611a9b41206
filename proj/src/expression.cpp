#include "negabase/expression.hpp"

#include <cctype>
#include <functional>
#include <string>

#include "negabase/error.hpp"

namespace negabase {

namespace {

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& what) {
  throw Error(ErrorCode::invalid_input,
              "cannot parse \"" + std::string(text) + "\" at " + std::to_string(pos) + ": " + what);
}

bool is_number_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.'; }

Rational decimal_literal(std::string_view text, std::size_t begin, std::size_t end) {
  const std::string_view lit = text.substr(begin, end - begin);
  const auto dot = lit.find('.');
  if (dot != lit.rfind('.')) fail(text, begin, "two decimal points");
  std::string digits(lit);
  Integer den = 1;
  if (dot != std::string_view::npos) {
    digits.erase(dot, 1);
    for (std::size_t i = dot + 1; i < lit.size(); ++i) den *= 10;
  }
  if (digits.empty()) fail(text, begin, "empty number");
  Rational r{Integer(digits, 10), den};
  r.canonicalize();
  return r;
}

/// Recursive descent over any ring-like T. Grammar:
///   sum   := term (('+'|'-') term)*
///   term  := unary (('*'|'/')? unary)*      -- adjacency multiplies
///   unary := ('-'|'+') unary | power
///   power := atom ('^' '-'? integer)?
///   atom  := number | var | '(' sum ')'
template <class T>
class Parser {
 public:
  struct Ops {
    std::function<T(const Rational&)> constant;
    std::function<T()> variable;
    std::function<T(const T&, const T&)> divide;  // empty: division not allowed
    std::function<T(const T&, long)> power;
  };

  Parser(std::string_view text, char var, Ops ops) : text_(text), var_(var), ops_(std::move(ops)) {}

  T parse() {
    T v = sum();
    skip();
    if (pos_ != text_.size()) fail(text_, pos_, "unexpected character");
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool starts_atom() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return is_number_char(c) || c == var_ || c == '(';
  }

  T sum() {
    T v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  T term() {
    T v = unary();
    for (;;) {
      if (eat('*')) v = v * unary();
      else if (eat('/')) {
        if (!ops_.divide) fail(text_, pos_, "division is not allowed here");
        v = ops_.divide(v, unary());
      } else if (starts_atom()) v = v * power();
      else return v;
    }
  }
  T unary() {
    if (eat('-')) return ops_.constant(Rational(-1)) * unary();
    if (eat('+')) return unary();
    return power();
  }
  T power() {
    T base = atom();
    if (!eat('^')) return base;
    const bool negative = eat('-');
    skip();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (begin == pos_) fail(text_, pos_, "expected an integer exponent");
    const long e = std::stol(std::string(text_.substr(begin, pos_ - begin)));
    if (negative && !ops_.divide) fail(text_, begin, "negative exponent is not allowed here");
    return ops_.power(base, negative ? -e : e);
  }
  T atom() {
    skip();
    if (pos_ >= text_.size()) fail(text_, pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      T v = sum();
      if (!eat(')')) fail(text_, pos_, "expected ')'");
      return v;
    }
    if (c == var_) {
      ++pos_;
      return ops_.variable();
    }
    if (is_number_char(c)) {
      const std::size_t begin = pos_;
      while (pos_ < text_.size() && is_number_char(text_[pos_])) ++pos_;
      return ops_.constant(decimal_literal(text_, begin, pos_));
    }
    fail(text_, pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  char var_;
  Ops ops_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(std::string_view text) {
  Parser<Rational>::Ops ops{
      [](const Rational& r) { return r; },
      [text]() -> Rational { fail(text, 0, "a rational cannot contain a variable"); },
      [text](const Rational& a, const Rational& b) {
        if (b == 0) throw Error(ErrorCode::division_by_zero, "division by zero in \"" + std::string(text) + "\"");
        return Rational(a / b);
      },
      [](const Rational& a, long e) {
        Rational r = 1;
        for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= a;
        if (e < 0) {
          if (r == 0) throw Error(ErrorCode::division_by_zero, "zero to a negative power");
          r = 1 / r;
        }
        return r;
      }};
  return Parser<Rational>(text, '\0', std::move(ops)).parse();
}

Polynomial parse_polynomial(std::string_view text, char var) {
  Parser<Polynomial>::Ops ops{
      [](const Rational& r) { return Polynomial::constant(r); },
      []() { return Polynomial::monomial(Rational(1), 1); },
      [text](const Polynomial& a, const Polynomial& b) {
        if (b.degree() != 0) fail(text, 0, "can only divide by a nonzero constant");
        return a * Polynomial::constant(1 / b.coeff(0));
      },
      [](const Polynomial& a, long e) {
        Polynomial r = Polynomial::constant(1);
        for (long i = 0; i < e; ++i) r = r * a;
        return r;
      }};
  return Parser<Polynomial>(text, var, std::move(ops)).parse();
}

AlgReal parse_element(const NumberField& field, std::string_view text, char var) {
  Parser<AlgReal>::Ops ops{
      [&field](const Rational& r) { return AlgReal(field, r); },
      [&field]() { return AlgReal::beta(field); },
      [](const AlgReal& a, const AlgReal& b) { return a / b; },
      [](const AlgReal& a, long e) { return a.pow(e); }};
  return Parser<AlgReal>(text, var, std::move(ops)).parse();
}

}  // namespace negabase
