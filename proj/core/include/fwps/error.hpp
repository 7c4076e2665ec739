#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fwps {

// Categories of failure. The CLI maps these onto its exit codes, so new
// kinds must be given a mapping there as well.
enum class ErrorKind {
  kInvalidArgument,
  kNotFullRank,
  kNotSimplicialRelation,
  kOriginNotInterior,
  kNotFullDimensional,
  kVertexNotPrimitive,
  kSingularMatrix,
  kWeightsNotCoprime,
  kWeightsNotWellFormed,
  kMissingBound,
  kParse,
  kInternal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fwps
