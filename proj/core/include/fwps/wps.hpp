#pragma once

#include <cstddef>
#include <vector>

#include "fwps/arith.hpp"
#include "fwps/simplex.hpp"
#include "fwps/weights.hpp"

namespace fwps {

// The simplex of P(lambda_0, ..., lambda_n): images of the standard basis
// under Z^{n+1} -> Z^{n+1} / Z(lambda), brought to column Hermite form.
// Vertex i carries weight lambda_i. Throws kWeightsNotWellFormed.
FanoSimplex wps_simplex(const WeightSystem& w);

// Every n-element subset of the weights has gcd 1.
bool is_well_formed(const WeightSystem& w);

// lambda_j divides h for every j.
bool is_gorenstein_weights(const WeightSystem& w);

// y_0 = 2, y_k = 1 + y_0 ... y_{k-1};  t_k = y_k - 1.
struct SylvesterTable {
  std::vector<Integer> y;
  std::vector<Integer> t;
};

SylvesterTable sylvester(std::size_t upto);

// All well-formed Gorenstein weight systems of length n+1, each sorted
// ascending, the list ordered lexicographically. Generated from unit
// partitions 1 = sum 1/m_j with lambda_j = h/m_j; complete because h <= t_n.
std::vector<WeightSystem> enumerate_gorenstein_weights(std::size_t n);

struct SearchOptions {
  bool barycentric_prefilter = true;
  bool lambda0_prefilter = true;
  unsigned threads = 1;
};

struct SearchStats {
  std::size_t candidates = 0;     // coprime, well-formed tuples
  std::size_t prefiltered = 0;    // removed before the lattice-point check
  std::size_t exact_checks = 0;
};

// All well-formed weight systems (sorted ascending) with h <= h_max whose
// weighted projective space has at worst the requested singularities.
std::vector<WeightSystem> search_weights(std::size_t n, const Integer& h_max, SingularityClass cls,
                                         const SearchOptions& options = {}, SearchStats* stats = nullptr);

}  // namespace fwps
