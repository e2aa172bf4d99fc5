#include "posmon/error.hpp"

namespace posmon {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTagMismatch: return "tag-mismatch";
    case ErrorCode::kUndefinedValuation: return "undefined-valuation";
    case ErrorCode::kInvalidPrime: return "invalid-prime";
    case ErrorCode::kDivisionByZero: return "division-by-zero";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kInvalidGenerator: return "invalid-generator";
    case ErrorCode::kNotAnElement: return "not-an-element";
    case ErrorCode::kNotASubmonoid: return "not-a-submonoid";
    case ErrorCode::kInfiniteSet: return "infinite-set";
    case ErrorCode::kInvalidEvalPoint: return "invalid-eval-point";
    case ErrorCode::kFamilyEvaluation: return "family-evaluation";
    case ErrorCode::kNotApplicable: return "not-applicable";
    case ErrorCode::kRegistry: return "registry";
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kSchema: return "schema";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

namespace {

std::string syntax_message(std::size_t offset,
                           const std::vector<std::string>& expected,
                           const std::string& found) {
  std::string msg = "syntax error at offset " + std::to_string(offset) + ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  msg += ", found " + found;
  return msg;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         const std::string& found)
    : Error(ErrorCode::kSyntax, syntax_message(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)) {}

SchemaError::SchemaError(std::string path, const std::string& message)
    : Error(ErrorCode::kSchema, path + ": " + message), path_(std::move(path)) {}

}  // namespace posmon
