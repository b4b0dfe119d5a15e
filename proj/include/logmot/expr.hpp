#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "logmot/log_class.hpp"

namespace logmot {

// Grammar shared by class expressions and e-polynomial expressions:
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' ['-'] integer]
//   atom   := integer | identifier | '(' expr ')'
//
// The leading '-' negates the first term, so printed normal forms re-parse to
// the same value. Negative exponents are only defined on invertible
// monomials (powers of L, up to sign).

namespace expr_detail {

struct Token {
  enum Kind { integer, ident, plus, minus, star, caret, lparen, rparen, end };
  Kind kind;
  std::string text;
  int column;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::integer, src.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                src[j] == '_'))
        ++j;
      out.push_back({Token::ident, src.substr(i, j - i), col});
      i = j;
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::plus; break;
      case '-': kind = Token::minus; break;
      case '*': kind = Token::star; break;
      case '^': kind = Token::caret; break;
      case '(': kind = Token::lparen; break;
      case ')': kind = Token::rparen; break;
      default:
        throw parse_failure(std::string("unexpected character '") + c + "'", 1, col);
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Token::end, "", static_cast<int>(src.size()) + 1});
  return out;
}

template <class Algebra>
class Parser {
 public:
  using Value = typename Algebra::Value;

  Parser(const std::string& src, const Algebra& algebra)
      : tokens_(tokenize(src)), algebra_(algebra) {}

  Value parse() {
    Value v = expr();
    expect(Token::end, "end of expression");
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }

  void expect(typename Token::Kind kind, const std::string& what) {
    if (peek().kind != kind)
      throw parse_failure("expected " + what, 1, peek().column);
    next();
  }

  Value expr() {
    bool negate = false;
    if (peek().kind == Token::minus) {
      next();
      negate = true;
    }
    Value v = term();
    if (negate) v = algebra_.neg(std::move(v));
    while (peek().kind == Token::plus || peek().kind == Token::minus) {
      bool minus = next().kind == Token::minus;
      Value rhs = term();
      v = minus ? algebra_.sub(std::move(v), rhs) : algebra_.add(std::move(v), rhs);
    }
    return v;
  }

  Value term() {
    Value v = factor();
    while (peek().kind == Token::star) {
      next();
      v = algebra_.mul(std::move(v), factor());
    }
    return v;
  }

  Value factor() {
    Value v = atom();
    if (peek().kind == Token::caret) {
      int col = next().column;
      bool negative = false;
      if (peek().kind == Token::minus) {
        next();
        negative = true;
      }
      if (peek().kind != Token::integer)
        throw parse_failure("expected integer exponent", 1, peek().column);
      Token t = next();
      long long e = 0;
      try {
        e = std::stoll(t.text);
      } catch (const std::exception&) {
        throw parse_failure("exponent out of range", 1, t.column);
      }
      v = algebra_.pow(std::move(v), negative ? -e : e, col);
    }
    return v;
  }

  Value atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::integer: {
        Token tok = next();
        return algebra_.from_int(Integer(tok.text));
      }
      case Token::ident: {
        Token tok = next();
        return algebra_.from_ident(tok.text, tok.column);
      }
      case Token::lparen: {
        next();
        Value v = expr();
        expect(Token::rparen, "')'");
        return v;
      }
      default:
        throw parse_failure("expected a value", 1, t.column);
    }
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  const Algebra& algebra_;
};

}  // namespace expr_detail

// Values are log classes; identifiers are L, P and registered symbols.
struct LogClassAlgebra {
  using Value = LogClass;
  SymbolTablePtr table;

  Value from_int(Integer c) const { return LogClass::constant(std::move(c)); }

  Value from_ident(const std::string& name, int column) const {
    if (name == "P") return LogClass::point();
    if (name == kLefschetz) return LogClass(MotiveClass::lefschetz());
    if (table && table->find(name)) return LogClass(MotiveClass::symbol(table, name));
    throw parse_failure("unknown symbol '" + name + "'", 1, column);
  }

  Value add(Value a, const Value& b) const { return a + b; }
  Value sub(Value a, const Value& b) const { return a - b; }
  Value mul(Value a, const Value& b) const { return a * b; }
  Value neg(Value a) const { return -a; }

  Value pow(Value a, long long e, int column) const {
    if (e >= 0) return a.pow(static_cast<unsigned long long>(e));
    Integer c;
    int k;
    if (!a.p_part().is_zero() || !a.scalar_part().unit_monomial(c, k))
      throw parse_failure("negative exponent on a non-invertible expression", 1,
                          column);
    Integer coeff = (c == -1 && e % 2 != 0) ? -1 : 1;
    return LogClass(MotiveClass::lefschetz(static_cast<int>(k * e), coeff));
  }
};

// Values are E-polynomials; identifiers are u and v.
struct EPolyAlgebra {
  using Value = EPolynomial;

  Value from_int(Integer c) const { return EPolynomial::constant(std::move(c)); }

  Value from_ident(const std::string& name, int column) const {
    if (name == "u") return uv_monomial(1, 0);
    if (name == "v") return uv_monomial(0, 1);
    throw parse_failure("unknown variable '" + name + "' (expected u or v)", 1,
                        column);
  }

  Value add(Value a, const Value& b) const { return a + b; }
  Value sub(Value a, const Value& b) const { return a - b; }
  Value mul(Value a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }

  Value pow(Value a, long long e, int column) const {
    if (e < 0)
      throw parse_failure("negative exponents are not defined on e-polynomials",
                          1, column);
    return a.pow(static_cast<unsigned long long>(e));
  }
};

inline LogClass parse_log_class(const std::string& src, SymbolTablePtr table) {
  LogClassAlgebra algebra{std::move(table)};
  return expr_detail::Parser<LogClassAlgebra>(src, algebra).parse();
}

// Motive-class expressions are class expressions in which P may not occur.
inline MotiveClass parse_motive(const std::string& src, SymbolTablePtr table) {
  LogClass v = parse_log_class(src, std::move(table));
  if (!v.p_part().is_zero())
    throw parse_failure("P is not allowed in a motive-class expression");
  return v.scalar_part();
}

inline EPolynomial parse_epoly(const std::string& src) {
  EPolyAlgebra algebra;
  return expr_detail::Parser<EPolyAlgebra>(src, algebra).parse();
}

}  // namespace logmot
