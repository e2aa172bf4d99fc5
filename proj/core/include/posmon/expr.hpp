#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "posmon/field.hpp"
#include "posmon/rational.hpp"

namespace posmon {

enum class ExprKind {
  kNumber,
  kVarX,
  kVarN,
  kPrime,  // p(e): the e-th prime
  kFloor,
  kNeg,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kPow,
};

/// Immutable expression tree over integer literals, X, the index n, p(.),
/// floor(.), + - * /, unary minus and ^ with a literal or n exponent.
/// Copies share structure; equality is structural.
class Expr {
 public:
  static Expr number(Integer value);
  static Expr var_x();
  static Expr var_n();
  static Expr prime(Expr arg);
  static Expr floor(Expr arg);
  static Expr neg(Expr arg);
  static Expr binary(ExprKind op, Expr lhs, Expr rhs);
  static Expr pow(Expr base, std::uint64_t exponent);
  /// base^n.
  static Expr pow_n(Expr base);

  ExprKind kind() const { return node_->kind; }
  const Integer& value() const { return node_->value; }
  /// kPow only; meaningful when !exponent_is_n().
  std::uint64_t exponent() const { return node_->exponent; }
  bool exponent_is_n() const { return node_->exponent_is_n; }
  const Expr& child(std::size_t i) const { return node_->children.at(i); }
  std::size_t arity() const { return node_->children.size(); }

  bool mentions_x() const;
  bool mentions_n() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node {
    ExprKind kind;
    Integer value;
    std::uint64_t exponent = 0;
    bool exponent_is_n = false;
    std::vector<Expr> children;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr make(Node n);

  std::shared_ptr<const Node> node_;
};

/// Grammar, loosest to tightest:
///   expr  := term (('+'|'-') term)*
///   term  := unary (('*'|'/') unary)*
///   unary := '-' unary | power
///   power := atom ('^' (NAT | 'n'))?
///   atom  := NAT | 'X' | 'n' | 'p' '(' expr ')' | 'floor' '(' expr ')' | '(' expr ')'
/// Throws SyntaxError carrying the byte offset and the expected tokens.
Expr parse_expr(std::string_view src);

/// Minimal-parenthesis rendering; parse_expr(render(e)) == e.
std::string render(const Expr& e);

/// Exact value at index n in the given field. Throws kTagMismatch for X in
/// Q, kDivisionByZero, and kDomain for floor of a non-constant or p(.) of
/// something other than a positive integer.
FieldElem eval_expr(const Expr& e, std::uint64_t n, Field field);

}  // namespace posmon
