#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace posmon {

using Integer = mpz_class;

/// Exact fraction in lowest terms with a positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : value_(value) {}
  /// Throws ErrorCode::kDivisionByZero when den == 0.
  Rational(const Integer& num, const Integer& den);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Greatest integer not exceeding the value.
  Integer floor() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// "a/b", or "a" when b == 1.
  std::string to_string() const;
  /// Accepts "a", "-a", "a/b" with decimal digits.
  static Rational parse(std::string_view text);

  const mpq_class& gmp() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  mpq_class value_;
};

/// v_p(q); std::nullopt stands for +infinity (q == 0).
/// Throws ErrorCode::kInvalidPrime when p is not prime.
std::optional<long> padic_valuation(const Integer& p, const Rational& q);

/// v_p of a nonzero integer, p assumed prime.
long integer_valuation(const Integer& p, Integer z);

bool is_prime(const Integer& p);

}  // namespace posmon
