#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horizon/core.hpp"
#include "horizon/errors.hpp"

namespace horizon::expr {

/// Immutable expression tree over variables x, y, t, named parameters,
/// arithmetic (+ - * / ^), and ln/exp/sqrt.
struct Node;
using Ast = std::shared_ptr<const Node>;

struct Node {
  enum class Kind {
    Constant,
    VarX,
    VarY,
    VarT,
    Param,
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Ln,
    Exp,
    Sqrt,
  };

  Kind kind;
  double value = 0.0;  // Constant
  std::string name;    // Param
  Ast a, b;            // children; unary nodes use only a
};

/// Parses an expression. Precedence ^ > unary - > * / > + -, with ^
/// right-associative. Throws ParseError carrying the byte offset and an
/// expected-token hint.
Ast parse(std::string_view text);

/// Names of all free parameters in the tree.
std::vector<std::string> parameters(const Ast& ast);

/// Evaluates with all parameters bound. Throws DomainError (carrying the
/// offending subexpression) for ln/sqrt domain violations, division by zero,
/// non-finite powers, or unbound parameters.
double eval(const Ast& ast, double x, double y, double t,
            const std::map<std::string, double>& params);

enum class Variable { X, Y };

/// Exact symbolic derivative with light simplification (constant folding,
/// 0*e -> 0, 1*e -> e, e+0 -> e). The result is closed under the grammar.
Ast diff(const Ast& ast, Variable var);

/// Renders the tree with minimal parentheses; parsing the result yields an
/// evaluation-equivalent tree.
std::string to_string(const Ast& ast);

/// Inequality between two expressions, used as an explicit domain predicate.
struct Condition {
  enum class Op { Less, LessEq, Greater, GreaterEq };
  Ast lhs;
  Op op;
  Ast rhs;

  /// True when both sides evaluate and the comparison holds. Evaluation
  /// failures count as infeasible.
  bool holds(double x, double y, double t,
             const std::map<std::string, double>& params) const;
};

/// Parses "lhs (< | <= | > | >=) rhs".
Condition parse_condition(std::string_view text);

/// Wires a ReturnFunction from an expression: partials are symbolic
/// derivatives (second partials by differentiating twice). Without an
/// explicit domain the point is feasible iff evaluation succeeds.
ReturnFunction make_return_function(Ast ast,
                                    std::map<std::string, double> params,
                                    std::optional<Condition> domain = {});

}  // namespace horizon::expr
