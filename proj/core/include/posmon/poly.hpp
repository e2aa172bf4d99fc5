#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posmon/rational.hpp"

namespace posmon {

/// Univariate polynomial over Q in the indeterminate X. Coefficients are
/// stored by ascending power with no trailing zeros, so the zero polynomial
/// has an empty coefficient list and no degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& constant);
  explicit Poly(std::vector<Rational> ascending);

  static Poly x() { return monomial(Rational(1), 1); }
  static Poly monomial(const Rational& c, std::size_t power);

  /// std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Rational coeff(std::size_t power) const;
  /// Highest nonzero coefficient; zero for the zero polynomial.
  Rational leading() const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;

  /// Euclidean division; throws kDivisionByZero when divisor is zero.
  static void divmod(const Poly& dividend, const Poly& divisor, Poly& quotient, Poly& remainder);
  Poly monic() const;

  Rational eval(const Rational& t) const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Descending powers, e.g. "X^2-3/2*X+1"; "0" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd over Q[X]; gcd(0, 0) == 0.
Poly gcd(Poly a, Poly b);

}  // namespace posmon
