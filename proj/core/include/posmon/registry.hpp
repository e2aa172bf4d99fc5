#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "posmon/family.hpp"

namespace posmon {

/// A named generating family with the inputs of its standard report. The
/// classification text is recorded, not inferred: limit properties such as
/// strong increase are not decidable from a finite window.
struct PaperExample {
  std::string id;
  std::string description;
  GeneratorFamily family;
  std::size_t default_truncation;
  std::vector<FieldElem> targets;
  std::string known_classification;
};

const std::vector<std::string>& paper_example_ids();

/// Throws kRegistry for an unknown id.
PaperExample paper_example(std::string_view id);

}  // namespace posmon
