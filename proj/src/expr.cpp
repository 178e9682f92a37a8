#include "horizon/expr.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

namespace horizon::expr {

namespace {

using Kind = Node::Kind;

Ast make(Node node) { return std::make_shared<const Node>(std::move(node)); }

Ast constant(double v) { return make({Kind::Constant, v, {}, {}, {}}); }

bool is_const(const Ast& e, double v) {
  return e->kind == Kind::Constant && e->value == v;
}

// Smart constructors with value-preserving simplification.

Ast neg(Ast a) {
  if (a->kind == Kind::Constant) return constant(-a->value);
  if (a->kind == Kind::Neg) return a->a;
  return make({Kind::Neg, 0.0, {}, std::move(a), {}});
}

Ast add(Ast a, Ast b) {
  if (a->kind == Kind::Constant && b->kind == Kind::Constant)
    return constant(a->value + b->value);
  if (is_const(a, 0.0)) return b;
  if (is_const(b, 0.0)) return a;
  return make({Kind::Add, 0.0, {}, std::move(a), std::move(b)});
}

Ast sub(Ast a, Ast b) {
  if (a->kind == Kind::Constant && b->kind == Kind::Constant)
    return constant(a->value - b->value);
  if (is_const(b, 0.0)) return a;
  if (is_const(a, 0.0)) return neg(std::move(b));
  return make({Kind::Sub, 0.0, {}, std::move(a), std::move(b)});
}

Ast mul(Ast a, Ast b) {
  if (a->kind == Kind::Constant && b->kind == Kind::Constant)
    return constant(a->value * b->value);
  if (is_const(a, 0.0) || is_const(b, 0.0)) return constant(0.0);
  if (is_const(a, 1.0)) return b;
  if (is_const(b, 1.0)) return a;
  return make({Kind::Mul, 0.0, {}, std::move(a), std::move(b)});
}

Ast div(Ast a, Ast b) {
  if (is_const(a, 0.0)) return constant(0.0);
  if (is_const(b, 1.0)) return a;
  return make({Kind::Div, 0.0, {}, std::move(a), std::move(b)});
}

Ast pow(Ast a, Ast b) {
  if (is_const(b, 1.0)) return a;
  if (is_const(b, 0.0)) return constant(1.0);
  return make({Kind::Pow, 0.0, {}, std::move(a), std::move(b)});
}

Ast call(Kind kind, Ast a) {
  return make({kind, 0.0, {}, std::move(a), {}});
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over a byte cursor.
// ---------------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ast parse_expression() {
    Ast e = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("end of input or operator");
    return e;
  }

  Condition parse_condition_text() {
    Ast lhs = parse_sum();
    skip_space();
    Condition::Op op;
    if (consume("<=")) {
      op = Condition::Op::LessEq;
    } else if (consume(">=")) {
      op = Condition::Op::GreaterEq;
    } else if (consume("<")) {
      op = Condition::Op::Less;
    } else if (consume(">")) {
      op = Condition::Op::Greater;
    } else {
      fail("comparison operator (<, <=, >, >=)");
    }
    Ast rhs = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("end of input");
    return {std::move(lhs), op, std::move(rhs)};
  }

 private:
  Ast parse_sum() {
    Ast e = parse_product();
    for (;;) {
      skip_space();
      if (consume("+")) {
        e = make({Kind::Add, 0.0, {}, e, parse_product()});
      } else if (consume("-")) {
        e = make({Kind::Sub, 0.0, {}, e, parse_product()});
      } else {
        return e;
      }
    }
  }

  Ast parse_product() {
    Ast e = parse_unary();
    for (;;) {
      skip_space();
      if (consume("*")) {
        e = make({Kind::Mul, 0.0, {}, e, parse_unary()});
      } else if (consume("/")) {
        e = make({Kind::Div, 0.0, {}, e, parse_unary()});
      } else {
        return e;
      }
    }
  }

  Ast parse_unary() {
    skip_space();
    if (consume("-")) return make({Kind::Neg, 0.0, {}, parse_unary(), {}});
    return parse_power();
  }

  Ast parse_power() {
    Ast base = parse_atom();
    skip_space();
    if (consume("^")) {
      // Right-associative; the exponent may carry a unary minus.
      return make({Kind::Pow, 0.0, {}, std::move(base), parse_unary()});
    }
    return base;
  }

  Ast parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("number, variable, or '('");
    const char c = text_[pos_];

    if (consume("(")) {
      Ast e = parse_sum();
      skip_space();
      if (!consume(")")) fail("')'");
      return e;
    }

    if ((c >= '0' && c <= '9') || c == '.') {
      double value = 0.0;
      const char* begin = text_.data() + pos_;
      const char* end = text_.data() + text_.size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc() || ptr == begin) fail("number");
      pos_ += static_cast<std::size_t>(ptr - begin);
      return constant(value);
    }

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "ln" || name == "exp" || name == "sqrt") {
        skip_space();
        if (!consume("(")) fail("'(' after function name");
        Ast arg = parse_sum();
        skip_space();
        if (!consume(")")) fail("')'");
        const Kind kind = name == "ln"    ? Kind::Ln
                          : name == "exp" ? Kind::Exp
                                          : Kind::Sqrt;
        return call(kind, std::move(arg));
      }
      if (name == "x") return make({Kind::VarX, 0.0, {}, {}, {}});
      if (name == "y") return make({Kind::VarY, 0.0, {}, {}, {}});
      if (name == "t") return make({Kind::VarT, 0.0, {}, {}, {}});
      return make({Kind::Param, 0.0, std::move(name), {}, {}});
    }

    fail("number, variable, or '('");
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError("syntax error at offset " + std::to_string(pos_) +
                         ": expected " + expected,
                     pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_params(const Ast& ast, std::set<std::string>& out) {
  if (!ast) return;
  if (ast->kind == Kind::Param) out.insert(ast->name);
  collect_params(ast->a, out);
  collect_params(ast->b, out);
}

[[noreturn]] void domain_fail(const Ast& ast, const std::string& what,
                              double arg) {
  std::ostringstream msg;
  msg << what << " in '" << to_string(ast) << "' (argument = " << arg << ")";
  throw DomainError(msg.str());
}

}  // namespace

Ast parse(std::string_view text) { return Parser(text).parse_expression(); }

Condition parse_condition(std::string_view text) {
  return Parser(text).parse_condition_text();
}

std::vector<std::string> parameters(const Ast& ast) {
  std::set<std::string> names;
  collect_params(ast, names);
  return {names.begin(), names.end()};
}

double eval(const Ast& ast, double x, double y, double t,
            const std::map<std::string, double>& params) {
  switch (ast->kind) {
    case Kind::Constant:
      return ast->value;
    case Kind::VarX:
      return x;
    case Kind::VarY:
      return y;
    case Kind::VarT:
      return t;
    case Kind::Param: {
      auto it = params.find(ast->name);
      if (it == params.end())
        throw DomainError("unbound parameter '" + ast->name + "'");
      return it->second;
    }
    case Kind::Neg:
      return -eval(ast->a, x, y, t, params);
    case Kind::Add:
      return eval(ast->a, x, y, t, params) + eval(ast->b, x, y, t, params);
    case Kind::Sub:
      return eval(ast->a, x, y, t, params) - eval(ast->b, x, y, t, params);
    case Kind::Mul:
      return eval(ast->a, x, y, t, params) * eval(ast->b, x, y, t, params);
    case Kind::Div: {
      const double denom = eval(ast->b, x, y, t, params);
      if (denom == 0.0) domain_fail(ast, "division by zero", denom);
      return eval(ast->a, x, y, t, params) / denom;
    }
    case Kind::Pow: {
      const double base = eval(ast->a, x, y, t, params);
      const double exponent = eval(ast->b, x, y, t, params);
      const double result = std::pow(base, exponent);
      if (!std::isfinite(result)) domain_fail(ast, "non-finite power", base);
      return result;
    }
    case Kind::Ln: {
      const double arg = eval(ast->a, x, y, t, params);
      if (arg <= 0.0) domain_fail(ast, "ln of nonpositive value", arg);
      return std::log(arg);
    }
    case Kind::Exp:
      return std::exp(eval(ast->a, x, y, t, params));
    case Kind::Sqrt: {
      const double arg = eval(ast->a, x, y, t, params);
      if (arg < 0.0) domain_fail(ast, "sqrt of negative value", arg);
      return std::sqrt(arg);
    }
  }
  throw DomainError("corrupt expression node");
}

Ast diff(const Ast& ast, Variable var) {
  switch (ast->kind) {
    case Kind::Constant:
    case Kind::VarT:
    case Kind::Param:
      return constant(0.0);
    case Kind::VarX:
      return constant(var == Variable::X ? 1.0 : 0.0);
    case Kind::VarY:
      return constant(var == Variable::Y ? 1.0 : 0.0);
    case Kind::Neg:
      return neg(diff(ast->a, var));
    case Kind::Add:
      return add(diff(ast->a, var), diff(ast->b, var));
    case Kind::Sub:
      return sub(diff(ast->a, var), diff(ast->b, var));
    case Kind::Mul:
      return add(mul(diff(ast->a, var), ast->b),
                 mul(ast->a, diff(ast->b, var)));
    case Kind::Div:
      return div(sub(mul(diff(ast->a, var), ast->b),
                     mul(ast->a, diff(ast->b, var))),
                 pow(ast->b, constant(2.0)));
    case Kind::Pow: {
      const Ast& base = ast->a;
      const Ast& exponent = ast->b;
      if (exponent->kind == Kind::Constant) {
        // d(u^c) = c * u^(c-1) * du
        return mul(mul(exponent, pow(base, constant(exponent->value - 1.0))),
                   diff(base, var));
      }
      // d(u^v) = u^v * (dv * ln(u) + v * du / u)
      return mul(ast, add(mul(diff(exponent, var), call(Kind::Ln, base)),
                          div(mul(exponent, diff(base, var)), base)));
    }
    case Kind::Ln:
      return div(diff(ast->a, var), ast->a);
    case Kind::Exp:
      return mul(ast, diff(ast->a, var));
    case Kind::Sqrt:
      return div(diff(ast->a, var), mul(constant(2.0), ast));
  }
  throw DomainError("corrupt expression node");
}

namespace {

// Precedence for printing: + - | * / | unary - | ^ | atoms.
int precedence(const Ast& e) {
  switch (e->kind) {
    case Kind::Add:
    case Kind::Sub:
      return 1;
    case Kind::Mul:
    case Kind::Div:
      return 2;
    case Kind::Neg:
      return 3;
    case Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print(const Ast& e, std::string& out);

void print_wrapped(const Ast& e, std::string& out, bool wrap) {
  if (wrap) {
    out += '(';
    print(e, out);
    out += ')';
  } else {
    print(e, out);
  }
}

void print(const Ast& e, std::string& out) {
  switch (e->kind) {
    case Kind::Constant: {
      char buf[32];
      auto res = std::to_chars(buf, buf + sizeof(buf), e->value);
      out.append(buf, res.ptr);
      return;
    }
    case Kind::VarX:
      out += 'x';
      return;
    case Kind::VarY:
      out += 'y';
      return;
    case Kind::VarT:
      out += 't';
      return;
    case Kind::Param:
      out += e->name;
      return;
    case Kind::Neg:
      out += '-';
      print_wrapped(e->a, out, precedence(e->a) <= 2);
      return;
    case Kind::Add:
    case Kind::Sub: {
      print_wrapped(e->a, out, precedence(e->a) < 1);
      out += e->kind == Kind::Add ? '+' : '-';
      print_wrapped(e->b, out, precedence(e->b) <= 1);
      return;
    }
    case Kind::Mul:
    case Kind::Div: {
      print_wrapped(e->a, out, precedence(e->a) < 2);
      out += e->kind == Kind::Mul ? '*' : '/';
      print_wrapped(e->b, out, precedence(e->b) <= 2);
      return;
    }
    case Kind::Pow: {
      print_wrapped(e->a, out, precedence(e->a) <= 4);
      out += '^';
      // The exponent reparses as a unary expression, so only sums and
      // products need parentheses.
      print_wrapped(e->b, out, precedence(e->b) < 3);
      return;
    }
    case Kind::Ln:
    case Kind::Exp:
    case Kind::Sqrt: {
      out += e->kind == Kind::Ln ? "ln" : e->kind == Kind::Exp ? "exp" : "sqrt";
      out += '(';
      print(e->a, out);
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const Ast& ast) {
  std::string out;
  print(ast, out);
  return out;
}

bool Condition::holds(double x, double y, double t,
                      const std::map<std::string, double>& params) const {
  double l, r;
  try {
    l = eval(lhs, x, y, t, params);
    r = eval(rhs, x, y, t, params);
  } catch (const DomainError&) {
    return false;
  }
  switch (op) {
    case Op::Less:
      return l < r;
    case Op::LessEq:
      return l <= r;
    case Op::Greater:
      return l > r;
    case Op::GreaterEq:
      return l >= r;
  }
  return false;
}

ReturnFunction make_return_function(Ast ast,
                                    std::map<std::string, double> params,
                                    std::optional<Condition> domain) {
  for (const std::string& name : parameters(ast)) {
    if (params.find(name) == params.end())
      throw ParameterError("expression parameter '" + name + "' is unbound");
  }

  struct Derivatives {
    Ast v, dx, dy, dxx, dxy, dyx, dyy;
  };
  auto d = std::make_shared<Derivatives>();
  d->v = ast;
  d->dx = diff(ast, Variable::X);
  d->dy = diff(ast, Variable::Y);
  d->dxx = diff(d->dx, Variable::X);
  d->dxy = diff(d->dx, Variable::Y);
  d->dyx = diff(d->dy, Variable::X);
  d->dyy = diff(d->dy, Variable::Y);

  auto bound = std::make_shared<const std::map<std::string, double>>(
      std::move(params));

  auto evaluator = [bound](const Ast& node) {
    return [node, bound](double x, double y, int t) {
      return eval(node, x, y, static_cast<double>(t), *bound);
    };
  };

  ReturnFunction rf;
  rf.eval = evaluator(d->v);
  rf.d1 = evaluator(d->dx);
  rf.d2 = evaluator(d->dy);
  rf.d11 = evaluator(d->dxx);
  rf.d12 = evaluator(d->dxy);
  rf.d21 = evaluator(d->dyx);
  rf.d22 = evaluator(d->dyy);

  if (domain) {
    auto cond = std::make_shared<const Condition>(std::move(*domain));
    rf.feasible = [cond, bound](double x, double y, int t) {
      return cond->holds(x, y, static_cast<double>(t), *bound);
    };
  } else {
    // Inferred domain: feasible wherever the expression evaluates.
    Ast v = d->v;
    rf.feasible = [v, bound](double x, double y, int t) {
      try {
        eval(v, x, y, static_cast<double>(t), *bound);
        return true;
      } catch (const DomainError&) {
        return false;
      }
    };
  }
  return rf;
}

}  // namespace horizon::expr
