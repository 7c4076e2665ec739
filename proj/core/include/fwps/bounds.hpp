#pragma once

// Exact inequalities on fake weighted projective spaces. Every bound is
// returned as a BoundReport (lhs, rhs, slack) rather than a bare boolean so
// tightness can be aggregated over a corpus. Bounds that speak about sorted
// weights use WeightSystem::sorted(): lambda_0 is the minimum, and the
// products lambda_1 ... lambda_n omit it.

#include <optional>
#include <string>
#include <vector>

#include "fwps/arith.hpp"
#include "fwps/simplex.hpp"
#include "fwps/weights.hpp"

namespace fwps {

struct BoundReport {
  std::string bound_name;
  Rational lhs;
  Rational rhs;
  bool strict = false;
  bool holds = false;
  Rational slack;  // rhs - lhs
  std::string instance;
  std::string note;

  static BoundReport make(std::string name, Rational lhs, Rational rhs, bool strict, std::string instance);
};

// vol P <= k h^n / (n! lambda_1 ... lambda_n), k = |interior lattice points|.
BoundReport corput_volume_bound(const FanoSimplex& p);

// mult P <= k h^(n-1) / (lambda_1 ... lambda_n). `claimed_mult` replaces
// the computed multiplicity on the left (catalog verification).
BoundReport mult_bound(const FanoSimplex& p, const std::optional<Integer>& claimed_mult = std::nullopt);

// h^(n-1) / (lambda_1 ... lambda_n). Also evaluates the degree form
// (lambda_0 / h) * h^n / (lambda_0 ... lambda_n) and throws kInternal if the
// two disagree.
Rational canonical_mult_bound(const WeightSystem& w);
Rational canonical_mult_bound_degree_form(const WeightSystem& w);
// mult P against canonical_mult_bound(weights); meaningful for canonical P.
BoundReport canonical_mult_report(const FanoSimplex& p,
                                  const std::optional<Integer>& claimed_mult = std::nullopt);

// (1/n!) 2^(3n-2) 15^((n-1) 2^(n+1)).
Rational pikhurko_volume_bound(std::size_t n);
BoundReport pikhurko_volume_report(const FanoSimplex& p);

// Oriented so that holds <=> 1/(8 * 15^(2^(n+1))) <= lambda_0/h. The
// theorem assumes P(w) canonical; `note` records that the caller vouches
// for it.
BoundReport lambda0_lower_bound(const WeightSystem& w);

struct NillReports {
  bool gorenstein = false;
  std::vector<BoundReport> reports;  // empty unless gorenstein
};

// h <= t_n, and lambda_k/h >= 1/((k+1) t_(n-k)) for k = 0..n.
NillReports nill_bounds(const WeightSystem& w);

// lambda_k/h <= 1/(n-k+2) for k = 2..n, strict for the terminal class.
// Necessary conditions; empty for n < 2.
std::vector<BoundReport> barycentric_bound(const WeightSystem& w, SingularityClass cls);

struct CorpusInstance {
  FanoSimplex simplex;
  std::string label;
  std::optional<Integer> claimed_mult;
};

struct BoundStatistics {
  std::string bound_name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<Rational> min_slack;
  std::string tightest_instance;
};

struct CorpusSummary {
  std::size_t instances = 0;
  std::vector<BoundStatistics> per_bound;  // ordered by bound name
  std::vector<BoundReport> failures;

  bool ok() const { return failures.empty(); }
};

// Every bound applicable to each instance: corput and mult always;
// canonical multiplicity, Pikhurko, lambda_0 and barycentric (canonical
// form) for canonical instances; strict barycentric for terminal ones;
// Nill for reflexive ones.
std::vector<BoundReport> applicable_bounds(const CorpusInstance& instance);

CorpusSummary verify_corpus(const std::vector<CorpusInstance>& instances, unsigned threads = 1);

}  // namespace fwps
