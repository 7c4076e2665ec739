#include "fwps/weights.hpp"

#include <algorithm>

#include "fwps/error.hpp"

namespace fwps {

WeightSystem::WeightSystem(std::vector<Integer> lambdas) : lambdas_(std::move(lambdas)), h_(0) {
  if (lambdas_.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "a weight system needs at least two weights");
  }
  for (const auto& l : lambdas_) {
    if (l <= 0) throw Error(ErrorKind::kInvalidArgument, "weights must be positive integers");
    h_ += l;
  }
  if (gcd(std::span<const Integer>(lambdas_)) != 1) {
    throw Error(ErrorKind::kWeightsNotCoprime, "weights not coprime: " + to_string());
  }
}

WeightSystem::WeightSystem(std::initializer_list<long> lambdas)
    : WeightSystem(std::vector<Integer>(lambdas.begin(), lambdas.end())) {}

WeightSystem WeightSystem::sorted() const {
  auto copy = lambdas_;
  std::sort(copy.begin(), copy.end());
  return WeightSystem(std::move(copy));
}

bool WeightSystem::same_multiset(const WeightSystem& other) const {
  return sorted().lambdas_ == other.sorted().lambdas_;
}

bool operator<(const WeightSystem& a, const WeightSystem& b) {
  return std::lexicographical_compare(a.lambdas_.begin(), a.lambdas_.end(), b.lambdas_.begin(),
                                      b.lambdas_.end());
}

std::string WeightSystem::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < lambdas_.size(); ++i) {
    if (i) out += ",";
    out += lambdas_[i].get_str();
  }
  return out + ")";
}

}  // namespace fwps
