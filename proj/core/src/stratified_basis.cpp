#include "stratified_basis.hpp"

#include <algorithm>
#include <limits>

#include "posmon/error.hpp"

namespace posmon::detail {

StratifiedBasis::StratifiedBasis(std::span<const FieldElem> sorted)
    : elems_(sorted.begin(), sorted.end()) {
  lead_.reserve(elems_.size());
  for (const auto& e : elems_) lead_.push_back(e.leading());

  // Sorted increasing means degrees are nondecreasing; collect runs.
  std::size_t i = 0;
  while (i < elems_.size()) {
    const int deg = elems_[i].arch_class().deg;
    std::size_t j = i;
    bool all_constant = true;
    while (j < elems_.size() && elems_[j].arch_class().deg == deg) {
      all_constant = all_constant && elems_[j].is_constant();
      ++j;
    }
    groups_.push_back({deg, i, j, all_constant});
    i = j;
  }
  std::reverse(groups_.begin(), groups_.end());

  suffix_lcm_.assign(elems_.size(), Integer(1));
  for (const auto& g : groups_) {
    Integer acc(1);
    for (std::size_t k = g.end; k-- > g.begin;) {
      mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), lead_[k].den().get_mpz_t());
      suffix_lcm_[k] = acc;
    }
  }
}

struct StratifiedBasis::Search {
  const StratifiedBasis& basis;
  const Visitor& visit;
  std::vector<std::uint64_t> counts;

  static std::uint64_t to_count(const Integer& v) {
    if (v > Integer(std::numeric_limits<std::int64_t>::max())) {
      throw Error(ErrorCode::kDomain, "factorization exponent exceeds 64 bits");
    }
    return v.get_ui();
  }

  bool solve(std::size_t gi, const FieldElem& rem) {
    if (rem.is_zero()) return visit(counts);
    const int deg = rem.arch_class().deg;
    while (gi < basis.groups_.size() && basis.groups_[gi].deg > deg) ++gi;
    if (gi == basis.groups_.size() || basis.groups_[gi].deg != deg) return true;
    return within_group(gi, basis.groups_[gi].begin, rem.leading(), rem);
  }

  bool within_group(std::size_t gi, std::size_t j, const Rational& target, const FieldElem& rem) {
    const Group& g = basis.groups_[gi];
    if (j == g.end) {
      if (!target.is_zero()) return true;
      if (g.all_constant && rem.is_constant()) return visit(counts);
      FieldElem next = rem;
      for (std::size_t k = g.begin; k < g.end; ++k) {
        if (counts[k] == 0) continue;
        next -= FieldElem::constant(rem.field(), Rational(Integer(counts[k]))) * basis.elems_[k];
      }
      if (next.sign() < 0) return true;
      return solve(gi + 1, next);
    }
    if (!mpz_divisible_p(basis.suffix_lcm_[j].get_mpz_t(), target.den().get_mpz_t())) return true;

    const Rational& lead = basis.lead_[j];
    if (j + 1 == g.end) {
      const Rational q = target / lead;
      if (!q.is_integer()) return true;
      counts[j] = to_count(q.num());
      const bool go_on = within_group(gi, j + 1, Rational(0), rem);
      counts[j] = 0;
      return go_on;
    }
    const std::uint64_t bound = to_count((target / lead).floor());
    for (std::uint64_t c = bound + 1; c-- > 0;) {
      counts[j] = c;
      const Rational next = target - Rational(Integer(c)) * lead;
      if (!within_group(gi, j + 1, next, rem)) {
        counts[j] = 0;
        return false;
      }
    }
    counts[j] = 0;
    return true;
  }
};

bool StratifiedBasis::enumerate(const FieldElem& x, const Visitor& visit) const {
  Search s{*this, visit, std::vector<std::uint64_t>(elems_.size(), 0)};
  return s.solve(0, x);
}

bool StratifiedBasis::has_solution(const FieldElem& x) const {
  bool found = false;
  enumerate(x, [&](std::span<const std::uint64_t>) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace posmon::detail
