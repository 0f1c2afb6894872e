#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hoc/section.hpp"

namespace hoc::dsl {

// Text syntax for scalars, forms, multivectors and sections.
//
//   expr      := wedgeTerm (("+" | "-") wedgeTerm)*
//   wedgeTerm := prod ("^" prod)*
//   prod      := atom ("*" atom)*
//   atom      := RATIONAL | VAR | COVEC | VEC | "(" expr ")" | "-" atom
//   section   := "(" expr ";" expr ")"
//   RATIONAL  := INT ("/" INT)?   VAR := "x" INDEX   COVEC := "dx" INDEX   VEC := "@" INDEX
//
// "@i" is the coordinate vector field d/dx_i. "*" needs at least one scalar
// operand; "^" needs operands of the same variance (scalars allowed).

enum class ErrorKind { lex, parse, grading };

class DslError : public std::runtime_error {
 public:
  DslError(ErrorKind kind, std::size_t position, const std::string& message);

  ErrorKind kind() const { return kind_; }
  /// 0-based byte offset into the input.
  std::size_t position() const { return position_; }

 private:
  ErrorKind kind_;
  std::size_t position_;
};

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Expr {
  enum class Op { rational, variable, covector, vector, negate, add, subtract, product, wedge, section };

  Op op = Op::rational;
  Span span;
  Rational value;  // rational literals
  int index = 0;   // variables and basis elements
  std::vector<Expr> args;
};

/// Syntax only; throws DslError of kind lex or parse.
Expr parse_expr(std::string_view text);

enum class Kind { scalar, form, multivec, section };

struct Expected {
  Kind kind = Kind::scalar;
  int degree = 0;

  static Expected scalar() { return {Kind::scalar, 0}; }
  static Expected form(int k) { return {Kind::form, k}; }
  static Expected multivec(int k) { return {Kind::multivec, k}; }
  static Expected section() { return {Kind::section, 0}; }
};

using Value = std::variant<Poly, Form, MultiVec, Section>;

/// Parses, grades against `expected` and elaborates. Sections use
/// ctx.order as the degree of their form part.
Value parse(std::string_view text, const Context& ctx, Expected expected);

/// Elaborates a scalar, form or multivector without a grading target; the
/// degree is inferred from the text. Sections are rejected (they need a
/// context to fix the degree of a zero form part).
Value parse_any(std::string_view text, int dim);

Poly parse_scalar(std::string_view text, int dim);
Form parse_form(std::string_view text, int dim, int degree);
MultiVec parse_multivec(std::string_view text, int dim, int degree);
Section parse_section(std::string_view text, const Context& ctx);

/// Canonical text: terms ordered by basis index then descending graded-lex
/// monomial order, coefficients in lowest terms, unit coefficients omitted.
/// parse(print(v)) == v.
std::string print(const Rational& q);
std::string print(const Poly& p);
std::string print(const Form& f);
std::string print(const MultiVec& v);
std::string print(const Section& s);
std::string print(const Value& v);

}  // namespace hoc::dsl
