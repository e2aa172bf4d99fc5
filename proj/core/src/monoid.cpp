#include "posmon/monoid.hpp"

#include <algorithm>
#include <numeric>

#include "posmon/error.hpp"
#include "stratified_basis.hpp"

namespace posmon {

std::uint64_t Factorization::length() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::uint64_t{0});
}

std::uint64_t Factorization::length_over(std::span<const std::size_t> atom_indices) const {
  std::uint64_t total = 0;
  for (std::size_t i : atom_indices) total += i < exponents.size() ? exponents[i] : 0;
  return total;
}

FinMonoid FinMonoid::build(Field field, std::span<const FieldElem> gens) {
  FinMonoid m;
  m.field_ = field;
  for (const auto& g : gens) {
    if (g.field() != field) {
      throw Error(ErrorCode::kTagMismatch, "generator " + g.to_string() + " is not an element of " +
                                               to_string(field));
    }
    if (g.sign() < 0) {
      throw Error(ErrorCode::kInvalidGenerator, "negative generator " + g.to_string());
    }
    if (!g.is_zero()) m.gens_.push_back(g);
  }
  std::sort(m.gens_.begin(), m.gens_.end(), FieldLess{});
  m.gens_.erase(std::unique(m.gens_.begin(), m.gens_.end()), m.gens_.end());

  for (const auto& g : m.gens_) {
    const ArchClass c = g.arch_class();
    if (m.classes_.empty() || m.classes_.back() != c) m.classes_.push_back(c);
  }

  // A sorted generator is an atom iff it is not generated by its predecessors.
  for (std::size_t i = 0; i < m.gens_.size(); ++i) {
    const detail::StratifiedBasis prefix(std::span(m.gens_).first(i));
    if (!prefix.has_solution(m.gens_[i])) {
      m.atoms_.push_back(m.gens_[i]);
      m.atom_positions_.push_back(i);
    }
  }
  m.gen_basis_ = std::make_shared<detail::StratifiedBasis>(m.gens_);
  m.atom_basis_ = std::make_shared<detail::StratifiedBasis>(m.atoms_);
  return m;
}

void FinMonoid::check_element(const FieldElem& x, const char* what) const {
  if (x.field() != field_) {
    throw Error(ErrorCode::kTagMismatch,
                std::string(what) + " " + x.to_string() + " is not an element of " + to_string(field_));
  }
  if (x.sign() < 0) {
    throw Error(ErrorCode::kDomain, std::string(what) + " " + x.to_string() + " is negative");
  }
}

bool FinMonoid::member(const FieldElem& x) const {
  check_element(x, "element");
  return gen_basis_->has_solution(x);
}

bool FinMonoid::for_each_factorization(
    const FieldElem& x, const std::function<bool(const Factorization&)>& visit) const {
  check_element(x, "element");
  Factorization z;
  return atom_basis_->enumerate(x, [&](std::span<const std::uint64_t> counts) {
    z.exponents.assign(counts.begin(), counts.end());
    return visit(z);
  });
}

std::vector<Factorization> FinMonoid::factorizations(const FieldElem& x) const {
  std::vector<Factorization> out;
  for_each_factorization(x, [&](const Factorization& z) {
    out.push_back(z);
    return true;
  });
  return out;
}

std::set<std::uint64_t> FinMonoid::length_set(const FieldElem& x) const {
  std::set<std::uint64_t> out;
  for_each_factorization(x, [&](const Factorization& z) {
    out.insert(z.length());
    return true;
  });
  return out;
}

bool FinMonoid::divides(const FieldElem& a, const FieldElem& x) const {
  if (!member(a)) throw Error(ErrorCode::kNotAnElement, a.to_string() + " is not in the monoid");
  if (!member(x)) throw Error(ErrorCode::kNotAnElement, x.to_string() + " is not in the monoid");
  const FieldElem diff = x - a;
  if (diff.sign() < 0) return false;
  return gen_basis_->has_solution(diff);
}

std::vector<FinMonoid> FinMonoid::strata() const {
  std::vector<FinMonoid> out;
  if (classes_.size() <= 1) {
    out.push_back(*this);
    return out;
  }
  std::size_t end = 0;
  for (const ArchClass c : classes_) {
    while (end < gens_.size() && gens_[end].arch_class() == c) ++end;
    out.push_back(build(field_, std::span(gens_).first(end)));
  }
  return out;
}

std::vector<FieldElem> FinMonoid::enumerate_below(const FieldElem& bound) const {
  check_element(bound, "bound");
  std::vector<FieldElem> out{FieldElem::constant(field_, Rational(0))};
  if (bound.is_zero()) return out;

  const int deg = bound.arch_class().deg;
  std::vector<FieldElem> same_class;
  for (const auto& a : atoms_) {
    const int d = a.arch_class().deg;
    if (d < deg) {
      throw Error(ErrorCode::kInfiniteSet, "every multiple of " + a.to_string() +
                                               " lies below " + bound.to_string());
    }
    if (d == deg) same_class.push_back(a);
  }
  // Generators of higher degree exceed the bound on their own.

  std::set<FieldElem, FieldLess> found(out.begin(), out.end());
  const Rational top = bound.leading();
  // Depth-first over the same-class atoms with the leading-coefficient budget.
  std::function<void(std::size_t, const FieldElem&, const Rational&)> walk =
      [&](std::size_t j, const FieldElem& sum, const Rational& budget) {
        if (j == same_class.size()) {
          if (!sum.is_zero() && compare(sum, bound) <= 0) found.insert(sum);
          return;
        }
        const Rational lead = same_class[j].leading();
        const Integer limit = (budget / lead).floor();
        FieldElem acc = sum;
        Rational left = budget;
        for (Integer c = 0; c <= limit; ++c) {
          walk(j + 1, acc, left);
          acc += same_class[j];
          left -= lead;
        }
      };
  walk(0, FieldElem::constant(field_, Rational(0)), top);
  return {found.begin(), found.end()};
}

std::optional<FieldElem> FinMonoid::fg_upper_bound() const {
  if (field_ == Field::kQ) return std::nullopt;
  if (!gens_.empty() && gens_.back().arch_class().deg >= 1) return gens_.back() * gens_.back();
  return FieldElem::x();
}

FieldElem FinMonoid::value(const Factorization& z) const {
  std::vector<std::size_t> all(atoms_.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return value_over(z, all);
}

FieldElem FinMonoid::value_over(const Factorization& z,
                                std::span<const std::size_t> atom_indices) const {
  FieldElem sum = FieldElem::constant(field_, Rational(0));
  for (std::size_t i : atom_indices) {
    if (i >= atoms_.size()) throw Error(ErrorCode::kDomain, "atom index out of range");
    if (i >= z.exponents.size() || z.exponents[i] == 0) continue;
    sum += FieldElem::constant(field_, Rational(Integer(z.exponents[i]))) * atoms_[i];
  }
  return sum;
}

bool check_divisor_closed(const FinMonoid& m, const FinMonoid& n,
                          std::span<const FieldElem> samples) {
  for (const auto& g : n.generators()) {
    if (g.field() != m.field() || !m.member(g)) {
      throw Error(ErrorCode::kNotASubmonoid, "generator " + g.to_string() + " is not in the monoid");
    }
  }
  for (const auto& x : samples) {
    if (!n.member(x)) {
      throw Error(ErrorCode::kNotAnElement, "sample " + x.to_string() + " is not in the submonoid");
    }
    for (const auto& a : m.atoms()) {
      if (m.divides(a, x) && !n.member(a)) return false;
    }
  }
  return true;
}

}  // namespace posmon
