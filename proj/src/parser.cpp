#include "freecurve/parser.hpp"

#include <cctype>

namespace freecurve {

namespace {

enum class Tok { number, variable, plus, minus, star, caret, lparen, rparen, slash, end };

struct Token {
  Tok kind = Tok::end;
  std::size_t pos = 0;
  std::string digits;  // for number
  char var = 0;        // for variable
};

struct ParseError {
  ParseDiagnostic diag;
};

class Parser {
 public:
  explicit Parser(std::string_view in) : in_(in) { advance(); }

  TriPoly parse() {
    TriPoly p = expr();
    if (cur_.kind != Tok::end) fail("unexpected trailing input", {"end of input", "'+'", "'-'", "'*'"});
    return p;
  }

 private:
  std::string_view in_;
  std::size_t at_ = 0;
  Token cur_;

  [[noreturn]] void fail(std::string msg, std::vector<std::string> expected, std::size_t pos) {
    throw ParseError{ParseDiagnostic{std::move(msg), pos, std::move(expected)}};
  }
  [[noreturn]] void fail(std::string msg, std::vector<std::string> expected) {
    fail(std::move(msg), std::move(expected), cur_.pos);
  }

  void advance() {
    while (at_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[at_]))) ++at_;
    cur_ = Token{};
    cur_.pos = at_;
    if (at_ >= in_.size()) {
      cur_.kind = Tok::end;
      return;
    }
    char c = in_[at_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur_.kind = Tok::number;
      while (at_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[at_])))
        cur_.digits += in_[at_++];
      return;
    }
    ++at_;
    switch (c) {
      case 'x': case 'y': case 'z':
        cur_.kind = Tok::variable;
        cur_.var = c;
        return;
      case '+': cur_.kind = Tok::plus; return;
      case '-': cur_.kind = Tok::minus; return;
      case '*': cur_.kind = Tok::star; return;
      case '^': cur_.kind = Tok::caret; return;
      case '(': cur_.kind = Tok::lparen; return;
      case ')': cur_.kind = Tok::rparen; return;
      case '/': cur_.kind = Tok::slash; return;
      default:
        fail(std::string("unexpected character '") + c + "'",
             {"number", "variable", "'('", "operator"}, cur_.pos);
    }
  }

  TriPoly expr() {
    bool neg = consume_sign();
    TriPoly acc = term();
    if (neg) acc = -acc;
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      bool minus = cur_.kind == Tok::minus;
      advance();
      bool inner_neg = consume_sign();
      TriPoly t = term();
      if (minus != inner_neg) acc -= t; else acc += t;
    }
    return acc;
  }

  bool consume_sign() {
    bool neg = false;
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      if (cur_.kind == Tok::minus) neg = !neg;
      advance();
    }
    return neg;
  }

  TriPoly term() {
    TriPoly acc = factor();
    for (;;) {
      if (cur_.kind == Tok::star) {
        advance();
        acc *= factor();
      } else if (cur_.kind == Tok::variable || cur_.kind == Tok::lparen) {
        // juxtaposition, e.g. "xyz", "2x^2y", "(x+y)(x-y)"
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  unsigned exponent() {
    if (cur_.kind != Tok::number)
      fail("exponent must be a non-negative integer", {"number"});
    if (cur_.digits.size() > 4) fail("exponent too large", {"number up to 9999"});
    unsigned e = static_cast<unsigned>(std::stoul(cur_.digits));
    advance();
    return e;
  }

  Int number_value() {
    Int n(cur_.digits, 10);  // explicit base: leading zeros must not mean octal
    advance();
    return n;
  }

  TriPoly factor() {
    switch (cur_.kind) {
      case Tok::number: {
        std::size_t numpos = cur_.pos;
        Int num = number_value();
        Rational value(num);
        if (cur_.kind == Tok::caret) {
          advance();
          unsigned e = exponent();
          mpz_class r;
          mpz_pow_ui(r.get_mpz_t(), num.get_mpz_t(), e);
          value = Rational(r);
        }
        if (cur_.kind == Tok::slash) {
          advance();
          if (cur_.kind != Tok::number)
            fail("'/' is only allowed between integer literals", {"number"});
          std::size_t denpos = cur_.pos;
          Int den = number_value();
          if (cur_.kind == Tok::caret) {
            advance();
            unsigned e = exponent();
            mpz_class r;
            mpz_pow_ui(r.get_mpz_t(), den.get_mpz_t(), e);
            den = r;
          }
          if (den == 0) fail("division by zero", {"nonzero integer"}, denpos);
          value = value / Rational(den);
        }
        (void)numpos;
        return TriPoly::constant(value);
      }
      case Tok::variable: {
        TriPoly v = TriPoly::variable(cur_.var);
        advance();
        if (cur_.kind == Tok::caret) {
          advance();
          return v.pow(exponent());
        }
        return v;
      }
      case Tok::lparen: {
        std::size_t open = cur_.pos;
        advance();
        TriPoly inner = expr();
        if (cur_.kind != Tok::rparen)
          fail("missing ')' for '(' at offset " + std::to_string(open), {"')'"});
        advance();
        if (cur_.kind == Tok::caret) {
          advance();
          return inner.pow(exponent());
        }
        return inner;
      }
      default:
        fail("expected a number, variable or parenthesized expression",
             {"number", "variable", "'('"});
    }
  }
};

}  // namespace

ParseResult parse_expression(std::string_view input) {
  try {
    Parser p(input);
    return ParseResult{p.parse(), std::nullopt};
  } catch (const ParseError& e) {
    return ParseResult{std::nullopt, e.diag};
  }
}

}  // namespace freecurve
