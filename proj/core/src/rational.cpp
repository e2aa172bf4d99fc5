#include "posmon/rational.hpp"

#include <cctype>

#include "posmon/error.hpp"

namespace posmon {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw Error(ErrorCode::kDomain, "not a rational literal: '" + std::string(text) + "'");
  }
  Rational r{Integer(std::string(num)), Integer(std::string(den))};
  return negative ? -r : r;
}

bool is_prime(const Integer& p) {
  return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

long integer_valuation(const Integer& p, Integer z) {
  if (z < 0) z = -z;
  long v = 0;
  while (z != 0 && mpz_divisible_p(z.get_mpz_t(), p.get_mpz_t())) {
    z /= p;
    ++v;
  }
  return v;
}

std::optional<long> padic_valuation(const Integer& p, const Rational& q) {
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidPrime, p.get_str() + " is not prime");
  if (q.is_zero()) return std::nullopt;
  return integer_valuation(p, q.num()) - integer_valuation(p, q.den());
}

}  // namespace posmon
