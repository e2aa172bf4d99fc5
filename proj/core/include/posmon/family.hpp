#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posmon/expr.hpp"
#include "posmon/field.hpp"
#include "posmon/monoid.hpp"
#include "posmon/spec_doc.hpp"

namespace posmon {

/// A generating sequence {a_n}: either an explicit finite list or one or
/// more parametric terms in n. Paired terms are all evaluated at n before
/// moving on to n+1.
class GeneratorFamily {
 public:
  static GeneratorFamily explicit_list(Field field, std::vector<FieldElem> elems);
  static GeneratorFamily parametric(Field field, std::vector<Expr> terms, std::uint64_t n_start = 1);
  static GeneratorFamily from_spec(const MonoidSpec& spec);

  Field field() const { return field_; }
  bool is_explicit() const { return terms_.empty(); }
  const std::vector<Expr>& terms() const { return terms_; }
  std::uint64_t n_start() const { return n_start_; }
  std::string describe() const;

  /// Term values for the first N indices in index order, duplicates kept.
  /// Explicit lists yield their first min(N, size) entries. Throws
  /// kFamilyEvaluation when a term is undefined or not positive.
  std::vector<FieldElem> sequence(std::size_t count) const;

 private:
  Field field_ = Field::kQ;
  std::vector<FieldElem> elems_;
  std::vector<Expr> terms_;
  std::uint64_t n_start_ = 1;
};

/// Monoid generated by the first N indices of the family.
FinMonoid truncate(const GeneratorFamily& family, std::size_t count);

enum class Monotonicity { kIncreasing, kDecreasing, kNeither, kConstant };
const char* to_string(Monotonicity m);

/// Non-strict monotonicity of a raw sequence; equal neighbours never break it.
Monotonicity classify_sequence(std::span<const FieldElem> seq);
/// classify_sequence over sequence(N); N >= 2.
Monotonicity classify_monotone(const GeneratorFamily& family, std::size_t count);

/// An increasing and a decreasing sequence of the given length whose
/// underlying set is exactly `set`: list the set in order, then repeat its
/// max (resp. min). Throws kDomain for an empty set or a length < |set|.
struct MonotoneEnumerations {
  std::vector<FieldElem> increasing;
  std::vector<FieldElem> decreasing;
};
MonotoneEnumerations monotone_enumerations(std::span<const FieldElem> set, std::size_t length);

enum class AtomStatus { kStable, kUnstable, kNonAtom };
const char* to_string(AtomStatus s);

struct GeneratorStability {
  FieldElem generator;
  std::size_t first_seen;  // smallest N in the window containing it
  AtomStatus status;
};

/// Window evidence for the atoms of an infinitely generated monoid. Each
/// generator is judged on every truncation from its first appearance up to
/// one past the window's end.
struct AtomStabilityReport {
  std::map<std::size_t, std::vector<FieldElem>> atoms_by_n;
  std::vector<GeneratorStability> generators;
};
AtomStabilityReport atom_stability(const GeneratorFamily& family, std::size_t first, std::size_t last);

struct GrowthRow {
  std::size_t n;
  std::uint64_t count;
  std::optional<std::uint64_t> max_length;  // absent when count == 0
};
std::vector<GrowthRow> growth(const GeneratorFamily& family, const FieldElem& target,
                              std::size_t first, std::size_t last);

/// Evidence carrier combining the per-N diagnostics over a window.
struct TruncationReport {
  std::size_t first = 1;
  std::size_t last = 1;
  std::map<std::size_t, std::vector<FieldElem>> atoms_by_n;
  std::vector<std::pair<FieldElem, std::vector<GrowthRow>>> growth;
  std::map<std::size_t, Monotonicity> monotone_by_n;  // N >= 2 only
  std::vector<GeneratorStability> stability;
};
TruncationReport truncation_report(const GeneratorFamily& family, std::span<const FieldElem> targets,
                                   std::size_t first, std::size_t last);

struct PuiseuxNormalization {
  FieldElem scale;              // a, with a * g_i rational for all i
  std::vector<Rational> gens;  // a * g_i, in input order
};
/// std::nullopt when some ratio g_i / g_1 is not rational. Rational inputs
/// keep scale 1; otherwise a = 1 / g_1.
std::optional<PuiseuxNormalization> puiseux_normalize(std::span<const FieldElem> gens);

struct DenominatorReport {
  bool bounded_trend = true;  // max d(g) already reached in the first half of the window
  Integer max_denominator{1};
  std::map<Integer, long> min_valuation;  // prime support of d(g) -> min v_p(g)
};
/// Throws kNotApplicable for a Q(X) family whose truncation is not
/// Puiseux-normalizable.
DenominatorReport denominator_boundedness(const GeneratorFamily& family, std::size_t count);

}  // namespace posmon
