#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "posmon/field.hpp"

namespace posmon::detail {

// Solves x = sum c_i * e_i over nonnegative integers for a sorted list of
// positive elements e_i by walking the Archimedean classes from the largest
// degree down. Inside a class only the leading coefficients matter for the
// top-degree equation; the exact remainder then drops to a lower class.
class StratifiedBasis {
 public:
  using Visitor = std::function<bool(std::span<const std::uint64_t>)>;

  explicit StratifiedBasis(std::span<const FieldElem> sorted);

  std::size_t size() const { return elems_.size(); }

  // Calls visit once per solution; returns false iff visit asked to stop.
  bool enumerate(const FieldElem& x, const Visitor& visit) const;

  bool has_solution(const FieldElem& x) const;

 private:
  struct Group {
    int deg;
    std::size_t begin;
    std::size_t end;
    bool all_constant;
  };

  struct Search;

  std::vector<FieldElem> elems_;
  std::vector<Rational> lead_;
  // lcm of the denominators of lead_[j..group end); any leading-coefficient
  // target reachable from index j has a denominator dividing it.
  std::vector<Integer> suffix_lcm_;
  std::vector<Group> groups_;  // descending degree
};

}  // namespace posmon::detail
