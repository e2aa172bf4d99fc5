#include "posmon/poly.hpp"

#include <algorithm>
#include <utility>

#include "posmon/error.hpp"

namespace posmon {

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
  Poly p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(power + 1, Rational(0));
  p.coeffs_[power] = c;
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Poly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly Poly::scaled(const Rational& c) const {
  if (c.is_zero()) return Poly();
  Poly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

void Poly::divmod(const Poly& dividend, const Poly& divisor, Poly& quotient, Poly& remainder) {
  if (divisor.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  const std::size_t dd = divisor.coeffs_.size() - 1;
  const Rational lead = divisor.leading();
  remainder = dividend;
  std::vector<Rational> q;
  if (remainder.coeffs_.size() > dd) q.assign(remainder.coeffs_.size() - dd, Rational(0));
  while (!remainder.is_zero() && remainder.coeffs_.size() - 1 >= dd) {
    const std::size_t shift = remainder.coeffs_.size() - 1 - dd;
    const Rational factor = remainder.leading() / lead;
    q[shift] = factor;
    for (std::size_t i = 0; i <= dd; ++i) remainder.coeffs_[i + shift] -= factor * divisor.coeffs_[i];
    remainder.trim();
  }
  quotient = Poly(std::move(q));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading());
}

Rational Poly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (c.sign() < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const Rational mag = c.abs();
    if (k == 0) {
      out += mag.to_string();
      continue;
    }
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += "X";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace posmon
