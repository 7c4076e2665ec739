#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fwps/arith.hpp"
#include "fwps/lattice.hpp"
#include "fwps/simplex.hpp"
#include "fwps/weights.hpp"

namespace fwps {

// A member of Herm(n, k): lower triangular, positive diagonal with product
// k, and each entry below the diagonal in column j lies in [0, h_jj).
// These are the canonical representatives of GL(n,Z) * H acting from the
// left.
class HermiteMatrix {
 public:
  // Throws kInvalidArgument if `entries` violates the shape above.
  explicit HermiteMatrix(IntegerMatrix entries);

  std::size_t dim() const noexcept { return entries_.rows(); }
  const IntegerMatrix& entries() const noexcept { return entries_; }
  const Integer& det() const noexcept { return det_; }

  friend bool operator==(const HermiteMatrix&, const HermiteMatrix&) = default;

 private:
  IntegerMatrix entries_;
  Integer det_;
};

// Herm(n, k) ordered by diagonal (lexicographic), then by the entries below
// the diagonal read row by row (lexicographic).
std::vector<HermiteMatrix> enumerate_hermite(std::size_t n, const Integer& k);

// The simplex with vertices H * rho_i, or nullopt when some image is not
// primitive. `p` must have multiplicity one.
std::optional<FanoSimplex> apply_hermite(const HermiteMatrix& h, const FanoSimplex& p);

// Canonical vertex matrix under GL(n,Z) and vertex relabelling: the
// lexicographically least column Hermite form over all vertex orders.
IntegerMatrix normal_form(const FanoSimplex& p);

enum class EnumerationClass { kTerminal, kCanonical, kGorenstein, kAll };

std::string_view to_string(EnumerationClass c);
std::optional<EnumerationClass> parse_enumeration_class(std::string_view text);

struct ClassificationRecord {
  IntegerMatrix normal_form_vertices;
  WeightSystem weights;  // in normal-form vertex order
  Integer multiplicity;
  bool terminal = false;
  bool canonical = false;
  bool reflexive = false;
  Rational degree{};
  std::vector<Integer> quotient{};
  std::vector<ConeSingularity> cone_singularities{};

  FanoSimplex simplex() const { return FanoSimplex(normal_form_vertices.row_points()); }
};

ClassificationRecord make_record(const FanoSimplex& p);

struct EnumerationOptions {
  // Required for kAll; otherwise defaults to floor of the canonical bound.
  std::optional<Integer> mult_cap;
  unsigned threads = 1;
};

struct EnumerationResult {
  std::vector<ClassificationRecord> records;  // by multiplicity, then normal form
  Integer mult_cap;
  bool short_circuited = false;
  std::vector<std::string> log;
  std::size_t candidates = 0;
  std::size_t rejected_non_primitive = 0;
  std::size_t rejected_class = 0;
  // max over records of mult * lambda_0 ... lambda_n / h^(n-1).
  std::optional<Rational> max_conjecture_ratio;
};

// Every fake weighted projective space with weights `w` (up to isomorphism)
// in the requested class and with multiplicity at most the cap. Throws
// kMissingBound for kAll without a cap.
EnumerationResult enumerate_fake_wps(const WeightSystem& w, EnumerationClass cls,
                                     const EnumerationOptions& options = {});

// The simplex of the fan of `p` read in the superlattice
// N + Z * (1/order) sum_i action_weights[i] * rho_i, i.e. the fan of
// X(p) / (Z/order) for the diagonal action with those weights.
FanoSimplex cyclic_quotient(const FanoSimplex& p, std::span<const Integer> action_weights, const Integer& order);

struct CrosscheckResult {
  FanoSimplex simplex;
  IntegerMatrix normal_form;
  bool matches = false;
};

// P^3 / (Z/5) with action weights (1,2,3,4), compared against the terminal
// fake weighted projective spaces with weights (1,1,1,1).
CrosscheckResult example3_crosscheck();

}  // namespace fwps
