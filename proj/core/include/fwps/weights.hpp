#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fwps/arith.hpp"

namespace fwps {

// Coprime positive weights (lambda_0, ..., lambda_n) with sum h. The entry
// order is whatever the producer chose (vertex order for weights recovered
// from a simplex); bound predicates work on sorted().
class WeightSystem {
 public:
  // Throws kInvalidArgument for fewer than two or non-positive entries and
  // kWeightsNotCoprime when the gcd exceeds one.
  explicit WeightSystem(std::vector<Integer> lambdas);
  WeightSystem(std::initializer_list<long> lambdas);

  std::size_t dim() const noexcept { return lambdas_.size() - 1; }
  std::size_t size() const noexcept { return lambdas_.size(); }
  const Integer& operator[](std::size_t i) const { return lambdas_[i]; }
  std::span<const Integer> lambdas() const noexcept { return lambdas_; }
  const Integer& h() const noexcept { return h_; }

  WeightSystem sorted() const;
  bool same_multiset(const WeightSystem& other) const;

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) { return a.lambdas_ == b.lambdas_; }
  friend bool operator<(const WeightSystem& a, const WeightSystem& b);

  // "(1,2,3)"
  std::string to_string() const;

 private:
  std::vector<Integer> lambdas_;
  Integer h_;
};

}  // namespace fwps
