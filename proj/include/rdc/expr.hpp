#pragma once

// Expression language for forms:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | caret
//   caret  := atom ('^' atom)*
//   atom   := number | name | name '(' int (',' int)* ')' | '(' expr ')'
// 'a ^ k' is an integer power when a elaborates to a 0-form and k is an integer literal,
// otherwise a wedge product.

#include <memory>
#include <string>
#include <vector>

#include "rdc/form.hpp"

namespace rdc {

struct Expr {
  enum class Kind { Number, Name, Call, Neg, Add, Sub, Mul, Div, Caret };
  Kind kind = Kind::Number;
  std::string text;   // literal digits or identifier
  std::vector<int> args;
  std::vector<std::shared_ptr<const Expr>> children;
  std::size_t pos = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expression(const std::string& text);

struct ElaborateOptions {
  /// Read x<k> and dx<k> as z<k> and dz<k> (real polynomial data complexified on input).
  bool real_as_complex = false;
};

Form elaborate(const Expr& e, const VariableContext& ctx, const ElaborateOptions& opts = {});
Form parse_form(const std::string& text, const VariableContext& ctx, const ElaborateOptions& opts = {});
/// Parse and require a polynomial 0-form.
Polynomial parse_polynomial(const std::string& text, const VariableContext& ctx, const ElaborateOptions& opts = {});

}  // namespace rdc
