#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace posmon {

enum class ErrorCode {
  kTagMismatch,
  kUndefinedValuation,
  kInvalidPrime,
  kDivisionByZero,
  kDomain,
  kInvalidGenerator,
  kNotAnElement,
  kNotASubmonoid,
  kInfiniteSet,
  kInvalidEvalPoint,
  kFamilyEvaluation,
  kNotApplicable,
  kRegistry,
  kSyntax,
  kSchema,
};

const char* to_string(ErrorCode code);

// Base of every error raised by the library. The code identifies the failure
// class; what() carries a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Raised by the document parser; path() is a JSON-pointer-like location
// such as "$.generators[1]".
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message);

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace posmon
