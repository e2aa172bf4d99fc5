#include "posmon/oracle.hpp"

#include <algorithm>
#include <iterator>
#include <optional>

#include "posmon/error.hpp"

namespace posmon::oracle {
namespace {

void search(std::span<const Rational> gens, std::size_t i, const Rational& rest,
            ExponentVector& counts, std::set<ExponentVector>& out) {
  if (i + 1 == gens.size()) {
    const Rational c = rest / gens[i];
    if (c.is_integer()) {
      counts[i] = c.num().get_ui();
      out.insert(counts);
      counts[i] = 0;
    }
    return;
  }
  const Integer bound = (rest / gens[i]).floor();
  Rational left = rest;
  for (std::uint64_t c = 0; Integer(c) <= bound; ++c) {
    counts[i] = c;
    search(gens, i + 1, left, counts, out);
    left -= gens[i];
  }
  counts[i] = 0;
}

// Same walk as `search`, run at every evaluation point at once: a count is
// kept only while every point's remainder stays nonnegative.
void search_joint(const std::vector<std::vector<Rational>>& values, std::size_t i,
                  std::vector<Rational>& rest, ExponentVector& counts,
                  std::set<ExponentVector>& out) {
  const std::size_t k = values.front().size();
  if (i + 1 == k) {
    std::optional<Rational> c;
    for (std::size_t t = 0; t < values.size(); ++t) {
      const Rational ct = rest[t] / values[t][i];
      if (!ct.is_integer() || (c && *c != ct)) return;
      c = ct;
    }
    counts[i] = c->num().get_ui();
    out.insert(counts);
    counts[i] = 0;
    return;
  }
  Integer bound = (rest[0] / values[0][i]).floor();
  for (std::size_t t = 1; t < values.size(); ++t) bound = std::min(bound, (rest[t] / values[t][i]).floor());
  const std::vector<Rational> saved = rest;
  for (std::uint64_t c = 0; Integer(c) <= bound; ++c) {
    counts[i] = c;
    search_joint(values, i + 1, rest, counts, out);
    for (std::size_t t = 0; t < values.size(); ++t) rest[t] -= values[t][i];
  }
  rest = saved;
  counts[i] = 0;
}

}  // namespace

std::set<ExponentVector> factorizations_q(std::span<const Rational> gens, const Rational& x) {
  if (x.sign() < 0) throw Error(ErrorCode::kDomain, "oracle: negative target " + x.to_string());
  for (const auto& g : gens) {
    if (g.sign() <= 0) throw Error(ErrorCode::kDomain, "oracle: nonpositive generator " + g.to_string());
  }
  std::set<ExponentVector> out;
  if (gens.empty()) {
    if (x.is_zero()) out.insert({});
    return out;
  }
  ExponentVector counts(gens.size(), 0);
  search(gens, 0, x, counts, out);
  return out;
}

std::vector<Rational> default_eval_points(std::span<const FieldElem> gens, const FieldElem& x) {
  Rational radius(0);
  auto absorb = [&](const Poly& p) {
    if (p.is_zero()) return;
    const Rational lead = p.leading().abs();
    for (const auto& c : p.coeffs()) radius = std::max(radius, c.abs() / lead);
  };
  for (const auto& g : gens) {
    absorb(g.num());
    absorb(g.den());
  }
  absorb(x.num());
  absorb(x.den());

  // Every real root r of a polynomial satisfies |r| < 1 + max |c_i / lc|.
  Integer candidate = (radius + Rational(1)).floor() + 1;
  std::vector<Rational> points;
  while (points.size() < 3) {
    if (is_prime(candidate)) points.emplace_back(candidate);
    ++candidate;
  }
  return points;
}

std::set<ExponentVector> candidates_qx(std::span<const FieldElem> gens, const FieldElem& x,
                                       std::span<const Rational> ts) {
  if (x.sign() < 0) throw Error(ErrorCode::kDomain, "oracle: negative target " + x.to_string());
  if (ts.empty()) throw Error(ErrorCode::kInvalidEvalPoint, "oracle: no evaluation points");

  std::vector<std::vector<Rational>> values;
  std::vector<Rational> rest;
  for (const auto& t : ts) {
    std::vector<Rational> row;
    row.reserve(gens.size());
    for (const auto& g : gens) {
      if (g.den().eval(t).is_zero() || g.eval(t).sign() <= 0) {
        throw Error(ErrorCode::kInvalidEvalPoint,
                    "X = " + t.to_string() + " makes " + g.to_string() + " nonpositive");
      }
      row.push_back(g.eval(t));
    }
    if (x.den().eval(t).is_zero() || x.eval(t).sign() < 0) {
      throw Error(ErrorCode::kInvalidEvalPoint,
                  "X = " + t.to_string() + " makes the target " + x.to_string() + " negative");
    }
    values.push_back(std::move(row));
    rest.push_back(x.eval(t));
  }
  std::set<ExponentVector> out;
  if (gens.empty()) {
    if (std::all_of(rest.begin(), rest.end(), [](const Rational& r) { return r.is_zero(); })) out.insert({});
    return out;
  }
  ExponentVector counts(gens.size(), 0);
  search_joint(values, 0, rest, counts, out);
  return out;
}

std::set<ExponentVector> factorizations_qx(std::span<const FieldElem> gens, const FieldElem& x,
                                           std::optional<std::vector<Rational>> points) {
  const std::vector<Rational> ts = points ? *points : default_eval_points(gens, x);
  std::set<ExponentVector> out;
  for (const auto& c : candidates_qx(gens, x, ts)) {
    FieldElem sum = FieldElem::constant(x.field(), Rational(0));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (c[i] != 0) sum += FieldElem::constant(x.field(), Rational(Integer(c[i]))) * gens[i];
    }
    if (sum == x) out.insert(c);
  }
  return out;
}

}  // namespace posmon::oracle
