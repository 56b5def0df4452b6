#include "rdc/expr.hpp"

#include <cctype>
#include <map>
#include <optional>

#include <gmpxx.h>

#include "rdc/hyperfunction.hpp"
#include "rdc/kernels.hpp"

namespace rdc {

namespace {

struct Token {
  enum class Kind { Number, Name, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < s.size()) {
    const char c = s[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = k;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      if (k < s.size() && s[k] == '.') {
        ++k;
        if (k >= s.size() || !std::isdigit(static_cast<unsigned char>(s[k])))
          throw ParseError("expected digits after decimal point", k);
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      }
      out.push_back({Token::Kind::Number, s.substr(start, k - start), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = k;
      while (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_')) ++k;
      out.push_back({Token::Kind::Name, s.substr(start, k - start), start});
    } else if (std::string("+-*/^(),").find(c) != std::string::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, c), k});
      ++k;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", k);
    }
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().kind != Token::Kind::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return e;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t at_ = 0;

  const Token& peek() const { return tokens_[at_]; }
  bool symbol(const char* s) const { return peek().kind == Token::Kind::Symbol && peek().text == s; }
  Token take() { return tokens_[at_++]; }
  void expect(const char* s) {
    if (!symbol(s)) throw ParseError(std::string("expected '") + s + "'", peek().pos);
    ++at_;
  }

  static ExprPtr node(Expr::Kind kind, std::size_t pos, std::vector<ExprPtr> children) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->pos = pos;
    e->children = std::move(children);
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (symbol("+") || symbol("-")) {
      Token op = take();
      lhs = node(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op.pos, {lhs, term()});
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (symbol("*") || symbol("/")) {
      Token op = take();
      lhs = node(op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, op.pos, {lhs, unary()});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (symbol("-")) {
      Token op = take();
      return node(Expr::Kind::Neg, op.pos, {unary()});
    }
    return caret();
  }

  ExprPtr caret() {
    ExprPtr lhs = atom();
    while (symbol("^")) {
      Token op = take();
      lhs = node(Expr::Kind::Caret, op.pos, {lhs, atom()});
    }
    return lhs;
  }

  int integer_argument() {
    bool negative = false;
    if (symbol("-")) {
      take();
      negative = true;
    }
    if (peek().kind != Token::Kind::Number || peek().text.find('.') != std::string::npos)
      throw ParseError("expected integer argument", peek().pos);
    Token t = take();
    if (t.text.size() > 6) throw ParseError("integer argument too large", t.pos);
    int v = std::stoi(t.text);
    return negative ? -v : v;
  }

  ExprPtr atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number) {
      take();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->text = t.text;
      e->pos = t.pos;
      return e;
    }
    if (t.kind == Token::Kind::Name) {
      Token name = take();
      auto e = std::make_shared<Expr>();
      e->text = name.text;
      e->pos = name.pos;
      e->kind = Expr::Kind::Name;
      if (symbol("(")) {
        take();
        e->kind = Expr::Kind::Call;
        e->args.push_back(integer_argument());
        while (symbol(",")) {
          take();
          e->args.push_back(integer_argument());
        }
        expect(")");
      }
      return e;
    }
    if (symbol("(")) {
      take();
      ExprPtr inner = expr();
      expect(")");
      return inner;
    }
    if (t.kind == Token::Kind::End) throw ParseError("unexpected end of input", t.pos);
    throw ParseError("unexpected '" + t.text + "'", t.pos);
  }
};

Scalar number_value(const std::string& digits) {
  auto dot = digits.find('.');
  if (dot == std::string::npos) return Scalar::rational(mpq_class(mpz_class(digits, 10)));
  std::string whole = digits.substr(0, dot) + digits.substr(dot + 1);
  mpz_class den = 1;
  for (std::size_t k = dot + 1; k < digits.size(); ++k) den *= 10;
  mpq_class q(mpz_class(whole, 10), den);
  q.canonicalize();
  return Scalar::rational(q);
}

// Identifier with a 1-based numeric suffix such as z12 or dzbar3.
std::optional<int> suffix_index(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  std::string rest = name.substr(prefix.size());
  for (char c : rest)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  if (rest.size() > 3 || rest[0] == '0') return std::nullopt;
  return std::stoi(rest);
}

class Elaborator {
 public:
  Elaborator(const VariableContext& ctx, const ElaborateOptions& opts) : ctx_(ctx), opts_(opts) {}

  Form run(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Number: return Form::constant(ctx_, number_value(e.text));
      case Expr::Kind::Name: return name(e);
      case Expr::Kind::Call: return call(e);
      case Expr::Kind::Neg: return -run(*e.children[0]);
      case Expr::Kind::Add: return run(*e.children[0]) + run(*e.children[1]);
      case Expr::Kind::Sub: return run(*e.children[0]) - run(*e.children[1]);
      case Expr::Kind::Mul: return wedge(run(*e.children[0]), run(*e.children[1]));
      case Expr::Kind::Div: return divide(e);
      case Expr::Kind::Caret: return caret(e);
    }
    throw ParseError("malformed expression", e.pos);
  }

 private:
  VariableContext ctx_;
  ElaborateOptions opts_;

  int complex_index(const Expr& e, int k) const {
    if (k < 1 || k > ctx_.n())
      throw ParseError("dimension mismatch: " + e.text + " outside C^" + std::to_string(ctx_.n()), e.pos);
    return k;
  }

  Form name(const Expr& e) {
    const std::string& s = e.text;
    if (s == "i") return Form::constant(ctx_, Scalar::i());
    if (s == "pi") return Form::constant(ctx_, Scalar::pi());
    if (auto k = suffix_index(s, "zbar")) return variable(ctx_.zbar(complex_index(e, *k)));
    if (auto k = suffix_index(s, "z")) return variable(ctx_.z(complex_index(e, *k)));
    if (auto k = suffix_index(s, "dzbar")) return Form::differential(ctx_, ctx_.zbar(complex_index(e, *k)));
    if (auto k = suffix_index(s, "dz")) return Form::differential(ctx_, ctx_.z(complex_index(e, *k)));
    if (auto k = suffix_index(s, "x")) {
      if (opts_.real_as_complex) return variable(ctx_.z(complex_index(e, *k)));
      return variable(ctx_.x(real_index(e, *k)));
    }
    if (auto k = suffix_index(s, "dx")) {
      if (opts_.real_as_complex) return Form::differential(ctx_, ctx_.z(complex_index(e, *k)));
      return Form::differential(ctx_, ctx_.x(real_index(e, *k)));
    }
    throw ParseError("unknown name '" + s + "'", e.pos);
  }

  int real_index(const Expr& e, int k) const {
    if (k < 1 || k > ctx_.l())
      throw ParseError("dimension mismatch: " + e.text + " outside R^" + std::to_string(ctx_.l()), e.pos);
    return k;
  }

  Form variable(int var) const { return Form::function(ctx_, Polynomial::variable(var)); }

  Form in_context(const Form& f, const Expr& e) const {
    if (f.context() != ctx_) throw ParseError("dimension mismatch: " + e.text + " lives in another space", e.pos);
    return f;
  }

  Form call(const Expr& e) {
    const std::string& s = e.text;
    const auto& a = e.args;
    auto arity = [&](std::size_t k) {
      if (a.size() != k) throw ParseError(s + " expects " + std::to_string(k) + " argument(s)", e.pos);
    };
    auto dim = [&](int n) {
      if (n < 1 || n > 5) throw ParseError(s + ": dimension out of range", e.pos);
      return n;
    };
    static const std::map<std::string, Form (*)(int)> kernels = {
        {"beta", bochner_martinelli}, {"beta0", bm_zero}, {"kappa", cauchy}, {"kappa0", cauchy_zero},
        {"Phi", make_Phi},           {"psi", angular_form},
        {"delta", [](int n) { return delta(n).xi01(); }}};
    try {
      if (auto it = kernels.find(s); it != kernels.end()) {
        arity(1);
        return in_context(it->second(dim(a[0])), e);
      }
      if (s == "chi") {
        if (a.size() < 3) throw ParseError("chi expects (n, p, i_1, ..., i_{p+1})", e.pos);
        return in_context(chi(dim(a[0]), a[1], MultiIndex(a[0], std::vector<int>(a.begin() + 2, a.end()))), e);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      throw ParseError(s + ": " + err.what(), e.pos);
    }
    throw ParseError("unknown function '" + s + "'", e.pos);
  }

  Form divide(const Expr& e) {
    Form num = run(*e.children[0]);
    Form den = run(*e.children[1]);
    if (!den.is_function() || den.terms().size() != 1)
      throw ParseError("divisor must be a constant or a monomial", e.children[1]->pos);
    const Coefficient& c = den.terms().begin()->second;
    if (c.denominator() != Monomial{} || c.quadratic_halves() != std::array<int, kQuadraticCount>{} ||
        c.numerator().terms().size() != 1)
      throw ParseError("divisor must be a constant or a monomial", e.children[1]->pos);
    const auto& [mono, scalar] = *c.numerator().terms().begin();
    Form inv = Form::function(ctx_, Coefficient(Polynomial(scalar.inverse()), mono));
    return multiply(inv, num);
  }

  Form caret(const Expr& e) {
    const Expr& rhs = *e.children[1];
    Form lhs = run(*e.children[0]);
    if (rhs.kind == Expr::Kind::Number && rhs.text.find('.') == std::string::npos && lhs.is_function()) {
      if (rhs.text.size() > 3) throw ParseError("exponent too large", rhs.pos);
      int k = std::stoi(rhs.text);
      Form r = Form::constant(ctx_, Scalar(1));
      for (int j = 0; j < k; ++j) r = wedge(r, lhs);
      return r;
    }
    return wedge(lhs, run(rhs));
  }
};

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(tokenize(text)).parse(); }

Form elaborate(const Expr& e, const VariableContext& ctx, const ElaborateOptions& opts) {
  return Elaborator(ctx, opts).run(e);
}

Form parse_form(const std::string& text, const VariableContext& ctx, const ElaborateOptions& opts) {
  return elaborate(*parse_expression(text), ctx, opts);
}

Polynomial parse_polynomial(const std::string& text, const VariableContext& ctx, const ElaborateOptions& opts) {
  Form f = parse_form(text, ctx, opts);
  if (f.is_zero()) return Polynomial();
  if (!f.is_function() || f.terms().size() != 1) throw ParseError("expected a polynomial function", 0);
  const Coefficient& c = f.terms().begin()->second;
  if (c.denominator() != Monomial{} || c.quadratic_halves() != std::array<int, kQuadraticCount>{})
    throw ParseError("expected a polynomial function", 0);
  return c.numerator();
}

}  // namespace rdc
