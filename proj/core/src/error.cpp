#include "fwps/error.hpp"

namespace fwps {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "invalid argument";
    case ErrorKind::kNotFullRank:
      return "not full rank";
    case ErrorKind::kNotSimplicialRelation:
      return "not simplicial relation";
    case ErrorKind::kOriginNotInterior:
      return "origin not interior";
    case ErrorKind::kNotFullDimensional:
      return "not full-dimensional";
    case ErrorKind::kVertexNotPrimitive:
      return "vertex not primitive";
    case ErrorKind::kSingularMatrix:
      return "singular matrix";
    case ErrorKind::kWeightsNotCoprime:
      return "weights not coprime";
    case ErrorKind::kWeightsNotWellFormed:
      return "weights not well-formed";
    case ErrorKind::kMissingBound:
      return "missing bound";
    case ErrorKind::kParse:
      return "parse error";
    case ErrorKind::kInternal:
      return "internal error";
  }
  return "unknown";
}

}  // namespace fwps
