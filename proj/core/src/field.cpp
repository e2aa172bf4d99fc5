#include "posmon/field.hpp"

#include <cstddef>
#include <utility>

#include "posmon/error.hpp"

namespace posmon {

const char* to_string(Field f) { return f == Field::kQ ? "Q" : "QX"; }

FieldElem FieldElem::constant(Field field, const Rational& q) {
  return FieldElem(field, Poly(q), Poly(Rational(1)));
}

FieldElem FieldElem::x() { return FieldElem(Field::kQX, Poly::x(), Poly(Rational(1))); }

FieldElem FieldElem::fraction(Field field, Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  FieldElem e(field, std::move(num), std::move(den));
  e.canonicalize();
  if (field == Field::kQ && !e.is_constant()) {
    throw Error(ErrorCode::kTagMismatch, "non-constant value " + e.to_string() + " in field Q");
  }
  return e;
}

void FieldElem::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      Poly q, r;
      Poly::divmod(num_, g, q, r);
      num_ = std::move(q);
      Poly::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  const Rational lc = den_.leading();
  if (lc != Rational(1)) {
    const Rational inv = Rational(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

void FieldElem::check_same_field(const FieldElem& o) const {
  if (field_ != o.field_) {
    throw Error(ErrorCode::kTagMismatch, std::string("cannot mix elements of ") +
                                             posmon::to_string(field_) + " and " +
                                             posmon::to_string(o.field_));
  }
}

Rational FieldElem::as_rational() const {
  if (!is_constant()) throw Error(ErrorCode::kDomain, to_string() + " is not a rational constant");
  return num_.coeff(0);
}

ArchClass FieldElem::arch_class() const {
  if (is_zero()) throw Error(ErrorCode::kUndefinedValuation, "Archimedean valuation of zero");
  return {static_cast<int>(*num_.degree()) - static_cast<int>(*den_.degree())};
}

FieldElem FieldElem::operator-() const { return FieldElem(field_, -num_, den_); }

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same_field(o);
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) canonicalize();
    else if (num_.is_zero()) den_ = Poly(Rational(1));
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same_field(o);
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  check_same_field(o);
  if (o.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

Rational FieldElem::eval(const Rational& t) const {
  const Rational d = den_.eval(t);
  if (d.is_zero()) throw Error(ErrorCode::kDivisionByZero, "denominator vanishes at " + t.to_string());
  return num_.eval(t) / d;
}

std::strong_ordering compare(const FieldElem& a, const FieldElem& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::kTagMismatch, std::string("cannot compare elements of ") +
                                             to_string(a.field()) + " and " + to_string(b.field()));
  }
  if (a.is_constant() && b.is_constant()) return a.as_rational() <=> b.as_rational();
  const int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less
               : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) { return compare(a, b); }

namespace {

std::size_t term_count(const Poly& p) {
  std::size_t n = 0;
  for (const auto& c : p.coeffs()) n += c.is_zero() ? 0 : 1;
  return n;
}

}  // namespace

std::string FieldElem::to_string() const {
  if (den_ == Poly(Rational(1))) return num_.to_string();
  if (is_constant()) return as_rational().to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  if (term_count(num_) > 1) n = "(" + n + ")";
  if (term_count(den_) > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace posmon
