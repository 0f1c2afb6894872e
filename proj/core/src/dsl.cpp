#include "hoc/dsl.hpp"

#include <cctype>
#include <sstream>
#include <type_traits>
#include <utility>

#include "hoc/exterior.hpp"

namespace hoc::dsl {
namespace {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::lex:
      return "lex error";
    case ErrorKind::parse:
      return "parse error";
    case ErrorKind::grading:
      return "grading error";
  }
  return "error";
}

// ---------------------------------------------------------------------------
// Lexer

struct Token {
  enum class Type { integer, slash, var, covec, vec, plus, minus, star, caret, lparen, rparen, semi, end };
  Type type;
  Span span;
  std::string digits;  // integer literal or index
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == text_.size()) {
        out.push_back({Token::Type::end, {pos_, pos_}, {}});
        return out;
      }
      const std::size_t start = pos_;
      const char c = text_[pos_];
      auto single = [&](Token::Type t) {
        ++pos_;
        out.push_back({t, {start, pos_}, {}});
      };
      switch (c) {
        case '+': single(Token::Type::plus); continue;
        case '-': single(Token::Type::minus); continue;
        case '*': single(Token::Type::star); continue;
        case '^': single(Token::Type::caret); continue;
        case '/': single(Token::Type::slash); continue;
        case '(': single(Token::Type::lparen); continue;
        case ')': single(Token::Type::rparen); continue;
        case ';': single(Token::Type::semi); continue;
        default: break;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back({Token::Type::integer, {start, 0}, digits()});
        out.back().span.end = pos_;
      } else if (c == 'x') {
        ++pos_;
        out.push_back({Token::Type::var, {start, 0}, index_digits(start, "x")});
        out.back().span.end = pos_;
      } else if (c == 'd') {
        ++pos_;
        if (pos_ >= text_.size() || text_[pos_] != 'x') {
          throw DslError(ErrorKind::lex, start, "expected 'dx<index>' after 'd'");
        }
        ++pos_;
        out.push_back({Token::Type::covec, {start, 0}, index_digits(start, "dx")});
        out.back().span.end = pos_;
      } else if (c == '@') {
        ++pos_;
        out.push_back({Token::Type::vec, {start, 0}, index_digits(start, "@")});
        out.back().span.end = pos_;
      } else {
        throw DslError(ErrorKind::lex, start, std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string index_digits(std::size_t start, const char* prefix) {
    std::string d = digits();
    if (d.empty()) throw DslError(ErrorKind::lex, start, std::string("expected an index after '") + prefix + "'");
    return d;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Expr top() {
    Expr e = expr();
    if (peek().type != Token::Type::end) fail(peek(), "unexpected trailing input");
    return e;
  }

 private:
  using T = Token::Type;

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool accept(T t) {
    if (peek().type != t) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw DslError(ErrorKind::parse, t.span.begin, msg);
  }

  static Expr binary(Expr::Op op, Expr lhs, Expr rhs) {
    Expr e;
    e.op = op;
    e.span = {lhs.span.begin, rhs.span.end};
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = wedge_term();
    for (;;) {
      if (accept(T::plus)) {
        lhs = binary(Expr::Op::add, std::move(lhs), wedge_term());
      } else if (accept(T::minus)) {
        lhs = binary(Expr::Op::subtract, std::move(lhs), wedge_term());
      } else {
        return lhs;
      }
    }
  }

  Expr wedge_term() {
    Expr lhs = prod();
    while (accept(T::caret)) lhs = binary(Expr::Op::wedge, std::move(lhs), prod());
    return lhs;
  }

  Expr prod() {
    Expr lhs = atom();
    while (accept(T::star)) lhs = binary(Expr::Op::product, std::move(lhs), atom());
    return lhs;
  }

  static int parse_index(const Token& t) {
    // Anything this long is out of range for every chart; grading rejects it.
    if (t.digits.size() > 6) return 1 << 30;
    return std::stoi(t.digits);
  }

  Expr atom() {
    const Token& t = peek();
    Expr e;
    e.span = t.span;
    switch (t.type) {
      case T::integer: {
        take();
        std::string den = "1";
        if (accept(T::slash)) {
          const Token& d = peek();
          if (d.type != T::integer) fail(d, "expected an integer denominator after '/'");
          take();
          if (mpz_class(d.digits, 10) == 0) fail(d, "zero denominator");
          den = d.digits;
          e.span.end = d.span.end;
        }
        e.op = Expr::Op::rational;
        e.value = make_rational(t.digits, den);
        return e;
      }
      case T::var:
      case T::covec:
      case T::vec:
        take();
        e.op = t.type == T::var ? Expr::Op::variable : t.type == T::covec ? Expr::Op::covector : Expr::Op::vector;
        e.index = parse_index(t);
        return e;
      case T::minus: {
        take();
        Expr inner = atom();
        e.op = Expr::Op::negate;
        e.span.end = inner.span.end;
        e.args.push_back(std::move(inner));
        return e;
      }
      case T::lparen: {
        take();
        Expr first = expr();
        if (accept(T::semi)) {
          Expr second = expr();
          const Token& close = peek();
          if (close.type != T::rparen) fail(close, "expected ')' to close section");
          take();
          e.op = Expr::Op::section;
          e.span.end = close.span.end;
          e.args.push_back(std::move(first));
          e.args.push_back(std::move(second));
          return e;
        }
        const Token& close = peek();
        if (close.type != T::rparen) fail(close, "expected ')'");
        take();
        first.span = {e.span.begin, close.span.end};
        return first;
      }
      default:
        fail(t, "expected a number, variable, basis element or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Elaboration

using Graded = std::variant<Poly, Form, MultiVec>;

[[noreturn]] void grading_error(const Span& s, const std::string& msg) {
  throw DslError(ErrorKind::grading, s.begin, msg);
}

std::string describe(const Graded& g) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Poly>) {
          return "a scalar";
        } else if constexpr (std::is_same_v<V, Form>) {
          return "a " + std::to_string(v.degree()) + "-form";
        } else {
          return "a " + std::to_string(v.degree()) + "-vector";
        }
      },
      g);
}

bool is_zero_scalar(const Graded& g) {
  const auto* p = std::get_if<Poly>(&g);
  return p && p->is_zero();
}

class Elaborator {
 public:
  explicit Elaborator(int dim) : dim_(dim) {}

  Graded run(const Expr& e) {
    switch (e.op) {
      case Expr::Op::rational:
        return Poly::constant(dim_, e.value);
      case Expr::Op::variable:
        return Poly::variable(dim_, checked_index(e));
      case Expr::Op::covector:
        return coordinate_covector(dim_, checked_index(e));
      case Expr::Op::vector:
        return coordinate_field(dim_, checked_index(e));
      case Expr::Op::negate:
        return std::visit([](auto v) -> Graded { return -v; }, run(e.args[0]));
      case Expr::Op::add:
      case Expr::Op::subtract:
        return sum(e, run(e.args[0]), run(e.args[1]), e.op == Expr::Op::subtract);
      case Expr::Op::product:
        return product(e, run(e.args[0]), run(e.args[1]));
      case Expr::Op::wedge:
        return wedge_of(e, run(e.args[0]), run(e.args[1]));
      case Expr::Op::section:
        grading_error(e.span, "a section may only appear at the top level");
    }
    grading_error(e.span, "malformed expression");
  }

 private:
  int checked_index(const Expr& e) const {
    if (e.index < 1 || e.index > dim_) {
      grading_error(e.span, "index " + std::to_string(e.index) + " outside 1.." + std::to_string(dim_));
    }
    return e.index;
  }

  static Graded sum(const Expr& e, Graded a, Graded b, bool subtract) {
    if (subtract) b = std::visit([](auto v) -> Graded { return -v; }, std::move(b));
    if (a.index() != b.index()) {
      if (is_zero_scalar(a)) return b;
      if (is_zero_scalar(b)) return a;
      grading_error(e.span, "cannot add " + describe(a) + " and " + describe(b));
    }
    return std::visit(
        [&](auto& lhs) -> Graded {
          using V = std::decay_t<decltype(lhs)>;
          const auto& rhs = std::get<V>(b);
          if constexpr (!std::is_same_v<V, Poly>) {
            if (lhs.degree() != rhs.degree()) {
              grading_error(e.span, "cannot add " + describe(a) + " and " + describe(b));
            }
          }
          return lhs + rhs;
        },
        a);
  }

  static Graded scale(const Poly& f, const Graded& g) {
    return std::visit([&](const auto& v) -> Graded { return f * v; }, g);
  }

  static Graded product(const Expr& e, const Graded& a, const Graded& b) {
    if (const auto* f = std::get_if<Poly>(&a)) return scale(*f, b);
    if (const auto* f = std::get_if<Poly>(&b)) return scale(*f, a);
    grading_error(e.span, "'*' needs a scalar operand, got " + describe(a) + " and " + describe(b));
  }

  static Graded wedge_of(const Expr& e, const Graded& a, const Graded& b) {
    if (const auto* f = std::get_if<Poly>(&a)) return scale(*f, b);
    if (const auto* f = std::get_if<Poly>(&b)) return scale(*f, a);
    if (a.index() != b.index()) {
      grading_error(e.span, "'^' cannot mix variance: " + describe(a) + " and " + describe(b));
    }
    if (const auto* fa = std::get_if<Form>(&a)) return wedge(*fa, std::get<Form>(b));
    return wedge(std::get<MultiVec>(a), std::get<MultiVec>(b));
  }

  int dim_;
};

Expr syntax(std::string_view text) { return Parser(Lexer(text).run()).top(); }

template <class T>
T coerce_tensor(const Graded& g, const Expr& e, int dim, int degree, const char* what) {
  if (const auto* t = std::get_if<T>(&g); t && t->degree() == degree) return *t;
  if (const auto* p = std::get_if<Poly>(&g)) {
    if (p->is_zero()) return T::zero(dim, degree);
    if (degree == 0) return T::scalar(*p);
  }
  grading_error(e.span, "expected a " + std::to_string(degree) + "-" + what + ", got " + describe(g));
}

Poly coerce_scalar(const Graded& g, const Expr& e) {
  if (const auto* p = std::get_if<Poly>(&g)) return *p;
  grading_error(e.span, "expected a scalar, got " + describe(g));
}

void require_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) throw ContextError("chart dimension out of range");
}

Value elaborate(const Expr& e, int dim, int order, Expected expected) {
  if (expected.kind == Kind::section) {
    if (e.op != Expr::Op::section) grading_error(e.span, "expected a section '(vector ; form)'");
    Elaborator el(dim);
    return Section(coerce_tensor<MultiVec>(el.run(e.args[0]), e.args[0], dim, 1, "vector"),
                   coerce_tensor<Form>(el.run(e.args[1]), e.args[1], dim, order, "form"));
  }
  Elaborator el(dim);
  Graded g = el.run(e);
  switch (expected.kind) {
    case Kind::scalar:
      return coerce_scalar(g, e);
    case Kind::form:
      return coerce_tensor<Form>(g, e, dim, expected.degree, "form");
    case Kind::multivec:
      return coerce_tensor<MultiVec>(g, e, dim, expected.degree, "vector");
    case Kind::section:
      break;
  }
  grading_error(e.span, "unknown expected kind");
}

// ---------------------------------------------------------------------------
// Printing

// One summand: coefficient, variables, then the basis wedge.
void append_term(std::string& out, bool& first, const Rational& c, const Monomial& m, int dim,
                 const std::string& basis) {
  const bool negative = c < 0;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  first = false;
  const Rational mag = abs(c);
  std::string body;
  auto factor = [&](const std::string& f) {
    if (!body.empty()) body += "*";
    body += f;
  };
  if (mag != 1 || (m.is_one() && basis.empty())) factor(mag.get_str(10));
  for (int i = 1; i <= dim; ++i) {
    for (int e = m.exponent(i); e > 0; --e) factor("x" + std::to_string(i));
  }
  if (!basis.empty()) factor(basis);
  out += body;
}

template <Variance V>
std::string print_tensor(const Tensor<V>& t) {
  if (t.is_zero()) return "0";
  const char* prefix = V == Variance::covariant ? "dx" : "@";
  std::string out;
  bool first = true;
  for (const auto& [idx, f] : t.terms()) {
    std::string basis;
    for (int i : idx.indices()) {
      if (!basis.empty()) basis += "^";
      basis += prefix + std::to_string(i);
    }
    for (const auto& [m, c] : f.terms()) append_term(out, first, c, m, t.dim(), basis);
  }
  return out;
}

}  // namespace

DslError::DslError(ErrorKind kind, std::size_t position, const std::string& message)
    : std::runtime_error(std::string(kind_name(kind)) + " at column " + std::to_string(position + 1) + ": " +
                         message),
      kind_(kind),
      position_(position) {}

Expr parse_expr(std::string_view text) { return syntax(text); }

Value parse(std::string_view text, const Context& ctx, Expected expected) {
  require_dim(ctx.dim);
  return elaborate(syntax(text), ctx.dim, ctx.order, expected);
}

Value parse_any(std::string_view text, int dim) {
  require_dim(dim);
  const Expr e = syntax(text);
  if (e.op == Expr::Op::section) grading_error(e.span, "a section needs a bracket context");
  Elaborator el(dim);
  return std::visit([](auto v) -> Value { return v; }, el.run(e));
}

Poly parse_scalar(std::string_view text, int dim) {
  require_dim(dim);
  return std::get<Poly>(elaborate(syntax(text), dim, 0, Expected::scalar()));
}

Form parse_form(std::string_view text, int dim, int degree) {
  require_dim(dim);
  return std::get<Form>(elaborate(syntax(text), dim, 0, Expected::form(degree)));
}

MultiVec parse_multivec(std::string_view text, int dim, int degree) {
  require_dim(dim);
  return std::get<MultiVec>(elaborate(syntax(text), dim, 0, Expected::multivec(degree)));
}

Section parse_section(std::string_view text, const Context& ctx) {
  return std::get<Section>(parse(text, ctx, Expected::section()));
}

std::string print(const Rational& q) { return q.get_str(10); }

std::string print(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) append_term(out, first, c, m, p.dim(), "");
  return out;
}

std::string print(const Form& f) { return print_tensor(f); }

std::string print(const MultiVec& v) { return print_tensor(v); }

std::string print(const Section& s) { return "(" + print(s.vec) + " ; " + print(s.form) + ")"; }

std::string print(const Value& v) {
  return std::visit([](const auto& x) { return print(x); }, v);
}

}  // namespace hoc::dsl
