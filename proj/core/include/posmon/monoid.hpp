#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "posmon/field.hpp"

namespace posmon {

/// Exponent vector over the sorted atom list of a FinMonoid: entry i counts
/// copies of atoms()[i]. Zero entries are absent from the formal sum.
struct Factorization {
  std::vector<std::uint64_t> exponents;

  /// |z|.
  std::uint64_t length() const;
  /// |z|_A for A given by atom indices.
  std::uint64_t length_over(std::span<const std::size_t> atom_indices) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend std::strong_ordering operator<=>(const Factorization&, const Factorization&) = default;
};

namespace detail {
class StratifiedBasis;
}

/// Finitely generated positive monoid of Q or Q(X). Immutable once built;
/// copies share the cached atom and stratum data.
class FinMonoid {
 public:
  /// Drops zeros, sorts and deduplicates. Throws kInvalidGenerator on a
  /// negative generator and kTagMismatch when a generator is not in `field`.
  static FinMonoid build(Field field, std::span<const FieldElem> gens);

  Field field() const { return field_; }
  const std::vector<FieldElem>& generators() const { return gens_; }
  const std::vector<FieldElem>& atoms() const { return atoms_; }
  /// Index in generators() of each atom.
  const std::vector<std::size_t>& atom_positions() const { return atom_positions_; }
  /// Distinct Archimedean classes of the generators by ascending degree.
  const std::vector<ArchClass>& classes() const { return classes_; }

  /// Throws kDomain for negative x.
  bool member(const FieldElem& x) const;

  /// Z(x) over atoms(), in enumeration order: strata from the largest degree
  /// down, atoms increasing within a stratum, exponents descending.
  std::vector<Factorization> factorizations(const FieldElem& x) const;
  /// Streams Z(x) in the same order; `visit` returns false to stop.
  /// Returns false iff stopped early.
  bool for_each_factorization(const FieldElem& x,
                              const std::function<bool(const Factorization&)>& visit) const;
  std::set<std::uint64_t> length_set(const FieldElem& x) const;

  /// a |_M x. Throws kNotAnElement when a or x is not in the monoid.
  bool divides(const FieldElem& a, const FieldElem& x) const;

  /// Nested F_1 ⊆ F_2 ⊆ ... ⊆ M, one per distinct Archimedean class, F_n
  /// generated by the generators of the n smallest classes in degree order.
  std::vector<FinMonoid> strata() const;

  /// {m in M : m <= bound}, sorted. Throws kDomain for negative bounds and
  /// kInfiniteSet when some generator has k*g <= bound for every k.
  std::vector<FieldElem> enumerate_below(const FieldElem& bound) const;

  /// Over Q(X): an element strictly above every element of M. std::nullopt
  /// over Q, where no such bound exists.
  std::optional<FieldElem> fg_upper_bound() const;

  /// phi(z).
  FieldElem value(const Factorization& z) const;
  /// phi_A(z) for A given by atom indices.
  FieldElem value_over(const Factorization& z, std::span<const std::size_t> atom_indices) const;

 private:
  FinMonoid() = default;
  void check_element(const FieldElem& x, const char* what) const;

  Field field_ = Field::kQ;
  std::vector<FieldElem> gens_;
  std::vector<FieldElem> atoms_;
  std::vector<std::size_t> atom_positions_;
  std::vector<ArchClass> classes_;
  std::shared_ptr<const detail::StratifiedBasis> gen_basis_;
  std::shared_ptr<const detail::StratifiedBasis> atom_basis_;
};

/// Sample-based certificate that N is divisor-closed in M: for each sample x
/// and each atom a of M with a |_M x, a must lie in N. Throws
/// kNotASubmonoid if a generator of N is not in M and kNotAnElement if a
/// sample is not in N.
bool check_divisor_closed(const FinMonoid& m, const FinMonoid& n,
                          std::span<const FieldElem> samples);

}  // namespace posmon
