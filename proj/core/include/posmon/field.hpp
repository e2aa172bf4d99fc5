#pragma once

#include <compare>
#include <string>

#include "posmon/poly.hpp"
#include "posmon/rational.hpp"

namespace posmon {

/// The two ambient ordered fields: Q, and Q(X) ordered so that a nonzero
/// p/q is positive iff lc(p)/lc(q) > 0.
enum class Field { kQ, kQX };

const char* to_string(Field f);

/// Archimedean class of a nonzero element, recorded as deg(num) - deg(den).
/// Larger degree means a smaller class: x ⪯ y iff y = O(x).
struct ArchClass {
  int deg = 0;

  friend bool operator==(ArchClass, ArchClass) = default;
  ArchClass operator+(ArchClass o) const { return {deg + o.deg}; }
};

/// alpha(a) ⪯ alpha(b), i.e. b = O(a).
inline bool arch_leq(ArchClass a, ArchClass b) { return a.deg >= b.deg; }

/// Element of Q or Q(X). Stored as a reduced fraction num/den over Q[X] with
/// den monic, so the sign is that of lc(num). Elements of Q always have
/// constant num and den == 1.
class FieldElem {
 public:
  FieldElem() : den_(Rational(1)) {}

  static FieldElem rational(const Rational& q) { return constant(Field::kQ, q); }
  static FieldElem constant(Field field, const Rational& q);
  static FieldElem x();
  /// Canonicalizes num/den. Throws kDivisionByZero when den is zero and
  /// kTagMismatch when a non-constant value is requested in Q.
  static FieldElem fraction(Field field, Poly num, Poly den);

  Field field() const { return field_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.leading().sign(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant element; throws kDomain otherwise.
  Rational as_rational() const;

  /// Throws kUndefinedValuation for zero.
  ArchClass arch_class() const;
  /// Coefficient of X^deg in the expansion at infinity, i.e. lc(num).
  Rational leading() const { return num_.leading(); }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  FieldElem abs() const { return sign() < 0 ? -*this : *this; }

  /// Value at X := t; throws kDivisionByZero when the denominator vanishes.
  Rational eval(const Rational& t) const;

  /// Structural equality (tags included); never throws.
  friend bool operator==(const FieldElem& a, const FieldElem& b) = default;
  /// Ordering per the field's cone; throws kTagMismatch across fields.
  friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b);

  /// "a/b" for constants, otherwise "(num)/(den)" with parentheses only when
  /// a side has more than one term, e.g. "(X^2+1)/X".
  std::string to_string() const;

 private:
  FieldElem(Field f, Poly n, Poly d) : field_(f), num_(std::move(n)), den_(std::move(d)) {}
  void canonicalize();
  void check_same_field(const FieldElem& o) const;

  Field field_ = Field::kQ;
  Poly num_;
  Poly den_;
};

std::strong_ordering compare(const FieldElem& a, const FieldElem& b);

/// Strict weak ordering for ordered containers of same-field elements.
struct FieldLess {
  bool operator()(const FieldElem& a, const FieldElem& b) const { return compare(a, b) < 0; }
};

}  // namespace posmon
