#pragma once

/**
 * @file expr.hpp
 * @brief Endpoint-field expressions: recursive-descent parser, evaluator and
 *        fully parenthesized printer.
 *
 * Grammar (whitespace is ignored between tokens):
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := unary (('*' | '/') unary)*
 *   unary   := '-' unary | power
 *   power   := primary ('^' unary)?            right-associative, binds tighter than unary minus
 *   primary := number | name | name '(' args ')' | '(' expr ')'
 *   guard   := expr ('<' | '<=' | '>' | '>=' | '==' | '!=') expr
 *
 * Names: x1..x16 (x is x1), pi, inf. Functions: abs, sqrt, exp, log, sin,
 * cos, min(a,b), max(a,b), if(guard, then, else); piecewise is an alias of
 * if. Only the selected branch of an if is evaluated.
 */

#include <charconv>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ivevp/error.hpp"
#include "ivevp/geometry.hpp"
#include "ivevp/interval.hpp"
#include "ivevp/ivf.hpp"

namespace ivevp {

struct Node {
  enum class Kind {
    Number, Variable, Neg, Add, Sub, Mul, Div, Pow,
    Abs, Sqrt, Exp, Log, Sin, Cos, Min, Max,
    Lt, Le, Gt, Ge, Eq, Ne, If,
  };

  Kind kind = Kind::Number;
  double value = 0;       ///< Number
  std::size_t index = 0;  ///< Variable: 1-based coordinate
  std::vector<Node> kids;

  friend bool operator==(const Node&, const Node&) = default;
};

namespace detail {

struct FunctionInfo {
  std::string_view name;
  Node::Kind kind;
  std::size_t arity;
};

inline constexpr FunctionInfo kFunctions[] = {
    {"abs", Node::Kind::Abs, 1}, {"sqrt", Node::Kind::Sqrt, 1}, {"exp", Node::Kind::Exp, 1},
    {"log", Node::Kind::Log, 1}, {"sin", Node::Kind::Sin, 1},   {"cos", Node::Kind::Cos, 1},
    {"min", Node::Kind::Min, 2}, {"max", Node::Kind::Max, 2},   {"if", Node::Kind::If, 3},
    {"piecewise", Node::Kind::If, 3},
};

inline constexpr std::size_t kMaxVariables = 16;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Node parse() {
    Node n = expr();
    skip();
    if (pos_ != s_.size()) fail({"operator", "end of input"}, "unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> open_;  // offsets of unclosed '('

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) const {
    std::size_t at = pos_;
    if (pos_ >= s_.size() && !open_.empty()) at = open_.back();
    throw SyntaxError(at, std::move(expected), what);
  }

  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n')) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Node make(Node::Kind k, std::vector<Node> kids) {
    Node n;
    n.kind = k;
    n.kids = std::move(kids);
    return n;
  }

  Node expr() {
    Node lhs = term();
    while (true) {
      if (eat('+')) {
        lhs = make(Node::Kind::Add, {std::move(lhs), term()});
      } else if (eat('-')) {
        lhs = make(Node::Kind::Sub, {std::move(lhs), term()});
      } else {
        return lhs;
      }
    }
  }

  Node term() {
    Node lhs = unary();
    while (true) {
      if (eat('*')) {
        lhs = make(Node::Kind::Mul, {std::move(lhs), unary()});
      } else if (eat('/')) {
        lhs = make(Node::Kind::Div, {std::move(lhs), unary()});
      } else {
        return lhs;
      }
    }
  }

  Node unary() {
    if (eat('-')) return make(Node::Kind::Neg, {unary()});
    return power();
  }

  Node power() {
    Node base = primary();
    if (eat('^')) return make(Node::Kind::Pow, {std::move(base), unary()});
    return base;
  }

  Node guard() {
    Node lhs = expr();
    skip();
    static constexpr std::pair<std::string_view, Node::Kind> ops[] = {
        {"<=", Node::Kind::Le}, {">=", Node::Kind::Ge}, {"==", Node::Kind::Eq}, {"!=", Node::Kind::Ne},
        {"<", Node::Kind::Lt},  {">", Node::Kind::Gt},
    };
    for (const auto& [tok, kind] : ops) {
      if (s_.substr(pos_).starts_with(tok)) {
        pos_ += tok.size();
        return make(kind, {std::move(lhs), expr()});
      }
    }
    fail({"<", "<=", ">", ">=", "==", "!="}, "expected a comparison");
  }

  Node primary() {
    skip();
    if (pos_ >= s_.size()) fail({"number", "name", "("}, "unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      open_.push_back(pos_++);
      Node inner = expr();
      if (!eat(')')) fail({")"}, "expected ')'");
      open_.pop_back();
      return inner;
    }
    if ((c >= '0' && c <= '9') || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    fail({"number", "name", "("}, "unexpected '" + std::string(1, c) + "'");
  }

  Node number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    };
    digits();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
        digits();
      } else {
        pos_ = save;  // "2e" is the number 2 followed by a name
      }
    }
    Node n;
    const auto res = std::from_chars(s_.data() + start, s_.data() + pos_, n.value);
    if (res.ec != std::errc{} || res.ptr != s_.data() + pos_) {
      pos_ = start;
      fail({"number"}, "malformed number");
    }
    return n;
  }

  Node name() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    const std::string_view id = s_.substr(start, pos_ - start);

    for (const auto& fn : kFunctions) {
      if (id != fn.name) continue;
      skip();
      if (pos_ >= s_.size() || s_[pos_] != '(') fail({"("}, "expected '(' after " + std::string(id));
      open_.push_back(pos_++);
      std::vector<Node> args;
      for (std::size_t i = 0; i < fn.arity; ++i) {
        if (i && !eat(',')) fail({","}, std::string(id) + " takes " + std::to_string(fn.arity) + " arguments");
        args.push_back(fn.kind == Node::Kind::If && i == 0 ? guard() : expr());
      }
      if (!eat(')')) fail({")"}, "expected ')'");
      open_.pop_back();
      return make(fn.kind, std::move(args));
    }

    Node n;
    if (id == "pi") {
      n.value = std::numbers::pi;
      return n;
    }
    if (id == "inf") {
      n.value = kInf;
      return n;
    }
    if (id == "x") {
      n.kind = Node::Kind::Variable;
      n.index = 1;
      return n;
    }
    if (id.size() >= 2 && id[0] == 'x' && id[1] >= '1' && id[1] <= '9') {
      std::size_t k = 0;
      const auto res = std::from_chars(id.data() + 1, id.data() + id.size(), k);
      if (res.ptr == id.data() + id.size() && k >= 1 && k <= kMaxVariables) {
        n.kind = Node::Kind::Variable;
        n.index = k;
        return n;
      }
    }
    throw Error(Errc::UnknownIdentifier, "unknown identifier '" + std::string(id) + "' at offset " +
                                             std::to_string(start));
  }
};

}  // namespace detail

inline Node parse_expr(std::string_view text) { return detail::Parser(text).parse(); }

inline double evaluate(const Node& n, std::span<const double> x) {
  using K = Node::Kind;
  auto arg = [&](std::size_t i) { return evaluate(n.kids[i], x); };
  switch (n.kind) {
    case K::Number: return n.value;
    case K::Variable:
      if (n.index > x.size()) throw Error(Errc::InvalidArgument, "variable x" + std::to_string(n.index) + " out of range");
      return x[n.index - 1];
    case K::Neg: return -arg(0);
    case K::Add: return arg(0) + arg(1);
    case K::Sub: return arg(0) - arg(1);
    case K::Mul: return arg(0) * arg(1);
    case K::Div: return arg(0) / arg(1);
    case K::Pow: return std::pow(arg(0), arg(1));
    case K::Abs: return std::abs(arg(0));
    case K::Sqrt: return std::sqrt(arg(0));
    case K::Exp: return std::exp(arg(0));
    case K::Log: return std::log(arg(0));
    case K::Sin: return std::sin(arg(0));
    case K::Cos: return std::cos(arg(0));
    case K::Min: return std::min(arg(0), arg(1));
    case K::Max: return std::max(arg(0), arg(1));
    case K::Lt: return arg(0) < arg(1);
    case K::Le: return arg(0) <= arg(1);
    case K::Gt: return arg(0) > arg(1);
    case K::Ge: return arg(0) >= arg(1);
    case K::Eq: return arg(0) == arg(1);
    case K::Ne: return arg(0) != arg(1);
    case K::If: return arg(0) != 0 ? arg(1) : arg(2);
  }
  return std::nan("");
}

/// Highest variable index used (0 for a constant expression).
inline std::size_t max_variable(const Node& n) {
  std::size_t m = n.kind == Node::Kind::Variable ? n.index : 0;
  for (const auto& k : n.kids) m = std::max(m, max_variable(k));
  return m;
}

/// Fully parenthesized text that parses back to an equal tree.
inline std::string to_string(const Node& n) {
  using K = Node::Kind;
  auto bin = [&](const char* op) { return "(" + to_string(n.kids[0]) + op + to_string(n.kids[1]) + ")"; };
  auto cmp = [&](const char* op) { return to_string(n.kids[0]) + op + to_string(n.kids[1]); };
  auto call = [&](const char* fn) {
    std::string s = std::string(fn) + "(";
    for (std::size_t i = 0; i < n.kids.size(); ++i) s += (i ? "," : "") + to_string(n.kids[i]);
    return s + ")";
  };
  switch (n.kind) {
    case K::Number: return n.value < 0 ? "(-" + format_real(-n.value) + ")" : format_real(n.value);
    case K::Variable: return "x" + std::to_string(n.index);
    case K::Neg: return "(-" + to_string(n.kids[0]) + ")";
    case K::Add: return bin("+");
    case K::Sub: return bin("-");
    case K::Mul: return bin("*");
    case K::Div: return bin("/");
    case K::Pow: return bin("^");
    case K::Abs: return call("abs");
    case K::Sqrt: return call("sqrt");
    case K::Exp: return call("exp");
    case K::Log: return call("log");
    case K::Sin: return call("sin");
    case K::Cos: return call("cos");
    case K::Min: return call("min");
    case K::Max: return call("max");
    case K::Lt: return cmp("<");
    case K::Le: return cmp("<=");
    case K::Gt: return cmp(">");
    case K::Ge: return cmp(">=");
    case K::Eq: return cmp("==");
    case K::Ne: return cmp("!=");
    case K::If: return call("if");
  }
  return "?";
}

/// IVF with endpoint fields given as expression text.
inline Ivf ivf_from_text(std::string_view lower, std::string_view upper, Box domain, std::string label = {}) {
  Node lo = parse_expr(lower);
  Node hi = parse_expr(upper);
  if (std::max(max_variable(lo), max_variable(hi)) > domain.dim()) {
    throw Error(Errc::InvalidArgument, "expression uses more variables than the box has dimensions");
  }
  if (label.empty()) label = "[" + std::string(lower) + ", " + std::string(upper) + "]";
  return Ivf(
      [lo = std::move(lo), hi = std::move(hi)](std::span<const double> x) {
        return EndpointValues{evaluate(lo, x), evaluate(hi, x)};
      },
      std::move(domain), std::move(label));
}

}  // namespace ivevp
