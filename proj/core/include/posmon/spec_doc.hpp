#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "posmon/expr.hpp"
#include "posmon/field.hpp"

namespace posmon {

/// A monoid description as read from a document:
///
///   {"field": "Q" | "QX", "generators": ["3", "5/2", ...]}
///   {"field": "Q" | "QX", "family": {"terms": ["1/p(n)", ...], "n_start": 1}}
///
/// "family" also accepts a single "term" string. Exactly one of
/// "generators" / "family" must be present.
struct MonoidSpec {
  struct Explicit {
    std::vector<std::string> sources;
    std::vector<Expr> exprs;
  };
  struct Family {
    std::vector<std::string> sources;
    std::vector<Expr> terms;
    std::uint64_t n_start = 1;
  };

  Field field = Field::kQ;
  std::variant<Explicit, Family> generators;
};

/// Parses and validates a document; throws SchemaError with a path such as
/// "$.generators[0]" on any violation.
MonoidSpec parse_spec(std::string_view doc);

Field parse_field(std::string_view tag);

}  // namespace posmon
