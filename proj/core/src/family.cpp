#include "posmon/family.hpp"

#include <algorithm>
#include <set>

#include "posmon/error.hpp"
#include "posmon/primes.hpp"

namespace posmon {

GeneratorFamily GeneratorFamily::explicit_list(Field field, std::vector<FieldElem> elems) {
  GeneratorFamily f;
  f.field_ = field;
  for (const auto& e : elems) {
    if (e.field() != field) {
      throw Error(ErrorCode::kTagMismatch, e.to_string() + " is not an element of " + to_string(field));
    }
  }
  f.elems_ = std::move(elems);
  return f;
}

GeneratorFamily GeneratorFamily::parametric(Field field, std::vector<Expr> terms, std::uint64_t n_start) {
  if (terms.empty()) throw Error(ErrorCode::kDomain, "parametric family needs at least one term");
  if (n_start == 0) throw Error(ErrorCode::kDomain, "n_start must be positive");
  GeneratorFamily f;
  f.field_ = field;
  f.terms_ = std::move(terms);
  f.n_start_ = n_start;
  return f;
}

GeneratorFamily GeneratorFamily::from_spec(const MonoidSpec& spec) {
  if (const auto* ex = std::get_if<MonoidSpec::Explicit>(&spec.generators)) {
    std::vector<FieldElem> elems;
    for (const auto& e : ex->exprs) elems.push_back(eval_expr(e, 1, spec.field));
    return explicit_list(spec.field, std::move(elems));
  }
  const auto& fam = std::get<MonoidSpec::Family>(spec.generators);
  return parametric(spec.field, fam.terms, fam.n_start);
}

std::string GeneratorFamily::describe() const {
  std::string out;
  if (is_explicit()) {
    for (const auto& e : elems_) out += (out.empty() ? "" : ", ") + e.to_string();
    return "<" + out + ">";
  }
  for (const auto& t : terms_) out += (out.empty() ? "" : ", ") + render(t);
  return "<" + out + " | n >= " + std::to_string(n_start_) + ">";
}

std::vector<FieldElem> GeneratorFamily::sequence(std::size_t count) const {
  std::vector<FieldElem> out;
  if (is_explicit()) {
    out.assign(elems_.begin(), elems_.begin() + static_cast<std::ptrdiff_t>(std::min(count, elems_.size())));
    return out;
  }
  out.reserve(count * terms_.size());
  for (std::uint64_t n = n_start_; n < n_start_ + count; ++n) {
    for (const auto& t : terms_) {
      FieldElem v;
      try {
        v = eval_expr(t, n, field_);
      } catch (const Error& err) {
        throw Error(ErrorCode::kFamilyEvaluation,
                    "term " + render(t) + " at n = " + std::to_string(n) + ": " + err.what());
      }
      if (v.sign() <= 0) {
        throw Error(ErrorCode::kFamilyEvaluation, "term " + render(t) + " at n = " + std::to_string(n) +
                                                      " is not positive: " + v.to_string());
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

FinMonoid truncate(const GeneratorFamily& family, std::size_t count) {
  if (count == 0) throw Error(ErrorCode::kDomain, "truncation size must be at least 1");
  const auto seq = family.sequence(count);
  return FinMonoid::build(family.field(), seq);
}

const char* to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::kIncreasing: return "increasing";
    case Monotonicity::kDecreasing: return "decreasing";
    case Monotonicity::kNeither: return "neither";
    case Monotonicity::kConstant: return "constant";
  }
  return "?";
}

Monotonicity classify_sequence(std::span<const FieldElem> seq) {
  bool up = false;
  bool down = false;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const auto c = compare(seq[i - 1], seq[i]);
    up = up || c < 0;
    down = down || c > 0;
  }
  if (up && down) return Monotonicity::kNeither;
  if (up) return Monotonicity::kIncreasing;
  if (down) return Monotonicity::kDecreasing;
  return Monotonicity::kConstant;
}

Monotonicity classify_monotone(const GeneratorFamily& family, std::size_t count) {
  if (count < 2) throw Error(ErrorCode::kDomain, "classification needs a window of at least 2");
  const auto seq = family.sequence(count);
  return classify_sequence(seq);
}

MonotoneEnumerations monotone_enumerations(std::span<const FieldElem> set, std::size_t length) {
  std::vector<FieldElem> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end(), FieldLess{});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw Error(ErrorCode::kDomain, "empty set has no enumeration");
  if (length < sorted.size()) throw Error(ErrorCode::kDomain, "enumeration shorter than the set");
  MonotoneEnumerations out;
  out.increasing = sorted;
  out.increasing.resize(length, sorted.back());
  out.decreasing.assign(sorted.rbegin(), sorted.rend());
  out.decreasing.resize(length, sorted.front());
  return out;
}

const char* to_string(AtomStatus s) {
  switch (s) {
    case AtomStatus::kStable: return "stable";
    case AtomStatus::kUnstable: return "unstable";
    case AtomStatus::kNonAtom: return "non-atom";
  }
  return "?";
}

AtomStabilityReport atom_stability(const GeneratorFamily& family, std::size_t first, std::size_t last) {
  if (first == 0 || first > last) throw Error(ErrorCode::kDomain, "truncation range must be nonempty and start at 1 or more");
  AtomStabilityReport report;
  // Truncations first..last+1; the extra one is lookahead for the last term.
  std::vector<FinMonoid> truncs;
  for (std::size_t n = first; n <= last + 1; ++n) truncs.push_back(truncate(family, n));
  for (std::size_t n = first; n <= last; ++n) report.atoms_by_n[n] = truncs[n - first].atoms();

  std::set<FieldElem, FieldLess> seen;
  for (std::size_t n = first; n <= last; ++n) {
    for (const auto& g : truncs[n - first].generators()) {
      if (!seen.insert(g).second) continue;
      bool ever_atom = false;
      bool lost = false;
      for (std::size_t k = n; k <= last + 1; ++k) {
        const auto& atoms = truncs[k - first].atoms();
        const bool is_atom = std::find(atoms.begin(), atoms.end(), g) != atoms.end();
        if (is_atom) ever_atom = true;
        else if (ever_atom) lost = true;
      }
      const AtomStatus status = !ever_atom ? AtomStatus::kNonAtom
                                : lost     ? AtomStatus::kUnstable
                                           : AtomStatus::kStable;
      report.generators.push_back({g, n, status});
    }
  }
  return report;
}

std::vector<GrowthRow> growth(const GeneratorFamily& family, const FieldElem& target,
                              std::size_t first, std::size_t last) {
  if (first == 0 || first > last) throw Error(ErrorCode::kDomain, "truncation range must be nonempty and start at 1 or more");
  std::vector<GrowthRow> rows;
  for (std::size_t n = first; n <= last; ++n) {
    const FinMonoid m = truncate(family, n);
    GrowthRow row{n, 0, std::nullopt};
    m.for_each_factorization(target, [&](const Factorization& z) {
      ++row.count;
      row.max_length = std::max(row.max_length.value_or(0), z.length());
      return true;
    });
    rows.push_back(row);
  }
  return rows;
}

TruncationReport truncation_report(const GeneratorFamily& family, std::span<const FieldElem> targets,
                                   std::size_t first, std::size_t last) {
  TruncationReport report;
  report.first = first;
  report.last = last;
  auto stability = atom_stability(family, first, last);
  report.atoms_by_n = std::move(stability.atoms_by_n);
  report.stability = std::move(stability.generators);
  for (const auto& t : targets) report.growth.emplace_back(t, growth(family, t, first, last));
  for (std::size_t n = std::max<std::size_t>(first, 2); n <= last; ++n) {
    report.monotone_by_n[n] = classify_monotone(family, n);
  }
  return report;
}

std::optional<PuiseuxNormalization> puiseux_normalize(std::span<const FieldElem> gens) {
  PuiseuxNormalization out;
  if (gens.empty()) {
    out.scale = FieldElem::constant(Field::kQ, Rational(1));
    return out;
  }
  const Field field = gens.front().field();
  for (const auto& g : gens) {
    if (g.sign() <= 0) throw Error(ErrorCode::kInvalidGenerator, "nonpositive generator " + g.to_string());
  }
  const bool all_rational =
      std::all_of(gens.begin(), gens.end(), [](const FieldElem& g) { return g.is_constant(); });
  out.scale = all_rational ? FieldElem::constant(field, Rational(1))
                           : FieldElem::constant(field, Rational(1)) / gens.front();
  for (const auto& g : gens) {
    const FieldElem scaled = out.scale * g;
    if (!scaled.is_constant()) return std::nullopt;
    out.gens.push_back(scaled.as_rational());
  }
  return out;
}

namespace {

std::vector<Integer> prime_factors(Integer m) {
  std::vector<Integer> out;
  for (std::uint64_t k = 1; m > 1; ++k) {
    const Integer p(nth_prime(k));
    if (p * p > m) {
      out.push_back(m);
      break;
    }
    if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      out.push_back(p);
      while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) m /= p;
    }
  }
  return out;
}

}  // namespace

DenominatorReport denominator_boundedness(const GeneratorFamily& family, std::size_t count) {
  if (count == 0) throw Error(ErrorCode::kDomain, "truncation size must be at least 1");
  const auto seq = family.sequence(count);
  std::vector<Rational> values;
  if (family.field() == Field::kQ) {
    for (const auto& g : seq) values.push_back(g.as_rational());
  } else {
    auto normalized = puiseux_normalize(seq);
    if (!normalized) {
      throw Error(ErrorCode::kNotApplicable, "family is not Puiseux-normalizable over the window");
    }
    values = std::move(normalized->gens);
  }

  DenominatorReport report;
  Integer early_max(1);
  const std::size_t half = (values.size() + 1) / 2;
  std::set<Integer> support;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Integer d = values[i].den();
    report.max_denominator = std::max(report.max_denominator, d);
    if (i < half) early_max = std::max(early_max, d);
    for (const auto& p : prime_factors(d)) support.insert(p);
  }
  report.bounded_trend = early_max == report.max_denominator;
  for (const auto& p : support) {
    long lowest = 0;
    bool first = true;
    for (const auto& v : values) {
      const long val = *padic_valuation(p, v);
      lowest = first ? val : std::min(lowest, val);
      first = false;
    }
    report.min_valuation[p] = lowest;
  }
  return report;
}

}  // namespace posmon
