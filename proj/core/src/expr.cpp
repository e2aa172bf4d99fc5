#include "posmon/expr.hpp"

#include <cctype>
#include <limits>

#include "posmon/error.hpp"
#include "posmon/primes.hpp"

namespace posmon {

Expr Expr::make(Node n) { return Expr(std::make_shared<const Node>(std::move(n))); }

Expr Expr::number(Integer value) { return make({ExprKind::kNumber, std::move(value), 0, false, {}}); }
Expr Expr::var_x() { return make({ExprKind::kVarX, Integer(0), 0, false, {}}); }
Expr Expr::var_n() { return make({ExprKind::kVarN, Integer(0), 0, false, {}}); }
Expr Expr::prime(Expr arg) { return make({ExprKind::kPrime, Integer(0), 0, false, {std::move(arg)}}); }
Expr Expr::floor(Expr arg) { return make({ExprKind::kFloor, Integer(0), 0, false, {std::move(arg)}}); }
Expr Expr::neg(Expr arg) { return make({ExprKind::kNeg, Integer(0), 0, false, {std::move(arg)}}); }
Expr Expr::binary(ExprKind op, Expr lhs, Expr rhs) {
  return make({op, Integer(0), 0, false, {std::move(lhs), std::move(rhs)}});
}
Expr Expr::pow(Expr base, std::uint64_t exponent) {
  return make({ExprKind::kPow, Integer(0), exponent, false, {std::move(base)}});
}
Expr Expr::pow_n(Expr base) { return make({ExprKind::kPow, Integer(0), 0, true, {std::move(base)}}); }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.value == y.value && x.exponent == y.exponent &&
         x.exponent_is_n == y.exponent_is_n && x.children == y.children;
}

bool Expr::mentions_x() const {
  if (kind() == ExprKind::kVarX) return true;
  for (const auto& c : node_->children) {
    if (c.mentions_x()) return true;
  }
  return false;
}

bool Expr::mentions_n() const {
  if (kind() == ExprKind::kVarN || (kind() == ExprKind::kPow && exponent_is_n())) return true;
  for (const auto& c : node_->children) {
    if (c.mentions_n()) return true;
  }
  return false;
}

namespace {

const std::vector<std::string> kOperandStart = {"number", "'X'", "'n'", "'p('", "'floor('", "'('", "'-'"};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view word) {
    skip_ws();
    if (src_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    if (after < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[after])) || src_[after] == '_')) {
      return false;
    }
    pos_ = after;
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_ws();
    std::string found = "end of input";
    if (pos_ < src_.size()) found = "'" + std::string(1, src_[pos_]) + "'";
    throw SyntaxError(pos_, std::move(expected), found);
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }

  Expr expr() {
    Expr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = Expr::binary(ExprKind::kAdd, lhs, term());
      } else if (accept('-')) {
        lhs = Expr::binary(ExprKind::kSub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    while (true) {
      if (accept('*')) {
        lhs = Expr::binary(ExprKind::kMul, lhs, unary());
      } else if (accept('/')) {
        lhs = Expr::binary(ExprKind::kDiv, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return Expr::neg(unary());
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (!accept('^')) return base;
    skip_ws();
    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      const Integer k = natural();
      if (k > Integer(std::numeric_limits<std::uint32_t>::max())) {
        throw Error(ErrorCode::kDomain, "exponent too large");
      }
      return Expr::pow(base, k.get_ui());
    }
    if (accept_word("n")) return Expr::pow_n(base);
    fail({"natural exponent", "'n'"});
  }

  Integer natural() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return Integer(std::string(src_.substr(start, pos_ - start)));
  }

  Expr atom() {
    skip_ws();
    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      return Expr::number(natural());
    }
    if (accept_word("X")) return Expr::var_x();
    if (accept_word("n")) return Expr::var_n();
    if (accept_word("p")) {
      expect('(');
      Expr arg = expr();
      expect(')');
      return Expr::prime(arg);
    }
    if (accept_word("floor")) {
      expect('(');
      Expr arg = expr();
      expect(')');
      return Expr::floor(arg);
    }
    if (accept('(')) {
      Expr inner = expr();
      expect(')');
      return inner;
    }
    fail(kOperandStart);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::kAdd:
    case ExprKind::kSub: return 1;
    case ExprKind::kMul:
    case ExprKind::kDiv: return 2;
    case ExprKind::kNeg: return 3;
    case ExprKind::kPow: return 4;
    default: return 5;
  }
}

std::string wrap(const Expr& e, bool parens) {
  return parens ? "(" + render(e) + ")" : render(e);
}

}  // namespace

Expr parse_expr(std::string_view src) { return Parser(src).parse(); }

std::string render(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::kNumber: return e.value().get_str();
    case ExprKind::kVarX: return "X";
    case ExprKind::kVarN: return "n";
    case ExprKind::kPrime: return "p(" + render(e.child(0)) + ")";
    case ExprKind::kFloor: return "floor(" + render(e.child(0)) + ")";
    case ExprKind::kNeg: return "-" + wrap(e.child(0), precedence(e.child(0)) < 3);
    case ExprKind::kPow:
      return wrap(e.child(0), precedence(e.child(0)) < 5) + "^" +
             (e.exponent_is_n() ? std::string("n") : std::to_string(e.exponent()));
    case ExprKind::kAdd:
    case ExprKind::kSub:
    case ExprKind::kMul:
    case ExprKind::kDiv: {
      static constexpr char kOps[] = {'+', '-', '*', '/'};
      const char op = kOps[static_cast<int>(e.kind()) - static_cast<int>(ExprKind::kAdd)];
      const int p = precedence(e);
      return wrap(e.child(0), precedence(e.child(0)) < p) + op +
             wrap(e.child(1), precedence(e.child(1)) <= p);
    }
  }
  return "";
}

namespace {

FieldElem power(const FieldElem& base, std::uint64_t k) {
  FieldElem result = FieldElem::constant(base.field(), Rational(1));
  FieldElem b = base;
  while (k > 0) {
    if (k & 1U) result *= b;
    k >>= 1U;
    if (k > 0) b *= b;
  }
  return result;
}

}  // namespace

FieldElem eval_expr(const Expr& e, std::uint64_t n, Field field) {
  switch (e.kind()) {
    case ExprKind::kNumber: return FieldElem::constant(field, Rational(e.value()));
    case ExprKind::kVarX:
      if (field == Field::kQ) throw Error(ErrorCode::kTagMismatch, "X is not an element of Q");
      return FieldElem::x();
    case ExprKind::kVarN: return FieldElem::constant(field, Rational(Integer(n)));
    case ExprKind::kPrime: {
      const FieldElem arg = eval_expr(e.child(0), n, field);
      if (!arg.is_constant() || !arg.as_rational().is_integer() || arg.sign() <= 0) {
        throw Error(ErrorCode::kDomain, "p() needs a positive integer, got " + arg.to_string());
      }
      const Integer k = arg.as_rational().num();
      if (!k.fits_ulong_p()) throw Error(ErrorCode::kDomain, "p() index too large");
      return FieldElem::constant(field, Rational(Integer(nth_prime(k.get_ui()))));
    }
    case ExprKind::kFloor: {
      const FieldElem arg = eval_expr(e.child(0), n, field);
      if (!arg.is_constant()) {
        throw Error(ErrorCode::kDomain, "floor of non-constant " + arg.to_string());
      }
      return FieldElem::constant(field, Rational(arg.as_rational().floor()));
    }
    case ExprKind::kNeg: return -eval_expr(e.child(0), n, field);
    case ExprKind::kAdd: return eval_expr(e.child(0), n, field) + eval_expr(e.child(1), n, field);
    case ExprKind::kSub: return eval_expr(e.child(0), n, field) - eval_expr(e.child(1), n, field);
    case ExprKind::kMul: return eval_expr(e.child(0), n, field) * eval_expr(e.child(1), n, field);
    case ExprKind::kDiv: return eval_expr(e.child(0), n, field) / eval_expr(e.child(1), n, field);
    case ExprKind::kPow:
      return power(eval_expr(e.child(0), n, field), e.exponent_is_n() ? n : e.exponent());
  }
  throw Error(ErrorCode::kDomain, "unknown expression node");
}

}  // namespace posmon
