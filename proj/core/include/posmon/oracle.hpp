#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "posmon/field.hpp"
#include "posmon/rational.hpp"

namespace posmon::oracle {

/// Exponent vector over the caller's generator list (not deduplicated).
using ExponentVector = std::vector<std::uint64_t>;

/// Plain depth-first search over c_i <= x / g_i with nonnegativity as the
/// only pruning; the last count is x's remainder divided by its generator. Throws kDomain if a generator is not positive or x < 0.
std::set<ExponentVector> factorizations_q(std::span<const Rational> gens, const Rational& x);

/// The three smallest primes exceeding the Cauchy root bound of every
/// numerator and denominator in gens and x, so all of them are positive
/// after substitution.
std::vector<Rational> default_eval_points(std::span<const FieldElem> gens, const FieldElem& x);

/// Substitutes X := t for each point and returns the vectors that solve
/// every substituted problem, i.e. the intersection of the factorizations_q
/// results. The points are searched jointly so that a count is abandoned as
/// soon as any point's remainder goes negative. Throws kInvalidEvalPoint when a point makes some
/// generator nonpositive or x negative.
std::set<ExponentVector> candidates_qx(std::span<const FieldElem> gens, const FieldElem& x,
                                       std::span<const Rational> points);

/// candidates_qx filtered by the exact identity sum c_i*g_i == x.
std::set<ExponentVector> factorizations_qx(std::span<const FieldElem> gens, const FieldElem& x,
                                           std::optional<std::vector<Rational>> points = std::nullopt);

}  // namespace posmon::oracle
