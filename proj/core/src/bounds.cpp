#include "fwps/bounds.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "fwps/error.hpp"
#include "fwps/wps.hpp"

namespace fwps {

namespace {

// lambda_1 ... lambda_n of the sorted weights.
Integer product_without_min(const WeightSystem& sorted) {
  Integer p = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i) p *= sorted[i];
  return p;
}

std::string label_of(const FanoSimplex& p) { return IntegerMatrix::from_rows(p.vertices()).to_string(); }

}  // namespace

BoundReport BoundReport::make(std::string name, Rational lhs, Rational rhs, bool strict, std::string instance) {
  BoundReport r;
  r.bound_name = std::move(name);
  r.holds = strict ? lhs < rhs : lhs <= rhs;
  r.slack = rhs - lhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.strict = strict;
  r.instance = std::move(instance);
  return r;
}

BoundReport corput_volume_bound(const FanoSimplex& p) {
  const auto w = p.weights().sorted();
  const std::size_t n = p.dim();
  const Integer k = static_cast<unsigned long>(p.interior_point_count());
  const Rational rhs = make_rational(k * pow(w.h(), n), factorial(static_cast<unsigned>(n)) * product_without_min(w));
  return BoundReport::make("corput_volume_bound", p.normalized_volume(), rhs, false, label_of(p));
}

BoundReport mult_bound(const FanoSimplex& p, const std::optional<Integer>& claimed_mult) {
  const auto w = p.weights().sorted();
  const std::size_t n = p.dim();
  const Integer k = static_cast<unsigned long>(p.interior_point_count());
  const Rational rhs = make_rational(k * pow(w.h(), n - 1), product_without_min(w));
  return BoundReport::make("mult_bound", Rational(claimed_mult.value_or(p.multiplicity())), rhs, false,
                           label_of(p));
}

Rational canonical_mult_bound_degree_form(const WeightSystem& w) {
  const auto s = w.sorted();
  Integer all = 1;
  for (const auto& l : s.lambdas()) all *= l;
  const Rational wps_degree = make_rational(pow(s.h(), s.dim()), all);
  Rational out = make_rational(s[0], s.h()) * wps_degree;
  out.canonicalize();
  return out;
}

Rational canonical_mult_bound(const WeightSystem& w) {
  const auto s = w.sorted();
  const Rational direct = make_rational(pow(s.h(), s.dim() - 1), product_without_min(s));
  if (direct != canonical_mult_bound_degree_form(w)) {
    throw Error(ErrorKind::kInternal, "canonical multiplicity bound forms disagree for " + w.to_string());
  }
  return direct;
}

BoundReport canonical_mult_report(const FanoSimplex& p, const std::optional<Integer>& claimed_mult) {
  return BoundReport::make("canonical_mult_bound", Rational(claimed_mult.value_or(p.multiplicity())),
                           canonical_mult_bound(p.weights()), false, label_of(p));
}

Rational pikhurko_volume_bound(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "dimension must be positive");
  const unsigned long exp15 = (n - 1) * (1UL << (n + 1));
  return make_rational(pow(2, 3 * n - 2) * pow(15, exp15), factorial(static_cast<unsigned>(n)));
}

BoundReport pikhurko_volume_report(const FanoSimplex& p) {
  return BoundReport::make("pikhurko_volume_bound", p.normalized_volume(), pikhurko_volume_bound(p.dim()), false,
                           label_of(p));
}

BoundReport lambda0_lower_bound(const WeightSystem& w) {
  const auto s = w.sorted();
  const std::size_t n = s.dim();
  const Rational lhs = make_rational(1, 8 * pow(15, 1UL << (n + 1)));
  auto r = BoundReport::make("lambda0_lower_bound", lhs, make_rational(s[0], s.h()), false, s.to_string());
  r.note = "assumes P" + s.to_string() + " canonical";
  return r;
}

NillReports nill_bounds(const WeightSystem& w) {
  NillReports out;
  out.gorenstein = is_gorenstein_weights(w);
  if (!out.gorenstein) return out;
  const auto s = w.sorted();
  const std::size_t n = s.dim();
  const auto table = sylvester(n);
  out.reports.push_back(BoundReport::make("nill_h_bound", Rational(s.h()), Rational(table.t[n]), false, s.to_string()));
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational lhs = make_rational(1, Integer(static_cast<unsigned long>(k + 1)) * table.t[n - k]);
    out.reports.push_back(BoundReport::make("nill_lambda_bound_k" + std::to_string(k), lhs,
                                            make_rational(s[k], s.h()), false, s.to_string()));
  }
  return out;
}

std::vector<BoundReport> barycentric_bound(const WeightSystem& w, SingularityClass cls) {
  const auto s = w.sorted();
  const std::size_t n = s.dim();
  std::vector<BoundReport> out;
  const bool strict = cls == SingularityClass::kTerminal;
  for (std::size_t k = 2; k <= n; ++k) {
    out.push_back(BoundReport::make(std::string(strict ? "barycentric_terminal_k" : "barycentric_canonical_k") +
                                        std::to_string(k),
                                    make_rational(s[k], s.h()),
                                    make_rational(1, static_cast<unsigned long>(n - k + 2)), strict, s.to_string()));
  }
  return out;
}

std::vector<BoundReport> applicable_bounds(const CorpusInstance& instance) {
  const auto& p = instance.simplex;
  std::vector<BoundReport> out;
  out.push_back(corput_volume_bound(p));
  out.push_back(mult_bound(p, instance.claimed_mult));
  const bool canonical = p.is_canonical();
  if (canonical) {
    out.push_back(canonical_mult_report(p, instance.claimed_mult));
    out.push_back(pikhurko_volume_report(p));
    out.push_back(lambda0_lower_bound(p.weights()));
    for (auto& r : barycentric_bound(p.weights(), SingularityClass::kCanonical)) out.push_back(std::move(r));
    if (p.is_terminal()) {
      for (auto& r : barycentric_bound(p.weights(), SingularityClass::kTerminal)) out.push_back(std::move(r));
    }
  }
  if (p.is_reflexive()) {
    auto nill = nill_bounds(p.weights());
    if (!nill.gorenstein) {
      // A reflexive simplex always has Gorenstein weights; reaching this is a bug.
      out.push_back(BoundReport::make("gorenstein_inheritance", Rational(1), Rational(0), false, label_of(p)));
    }
    for (auto& r : nill.reports) out.push_back(std::move(r));
  }
  for (auto& r : out) r.instance = instance.label.empty() ? label_of(p) : instance.label;
  return out;
}

CorpusSummary verify_corpus(const std::vector<CorpusInstance>& instances, unsigned threads) {
  std::vector<std::vector<BoundReport>> per_instance(instances.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(instances.size(), 1))));
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < instances.size(); i += threads) per_instance[i] = applicable_bounds(instances[i]);
      });
    }
  }

  CorpusSummary summary;
  summary.instances = instances.size();
  std::map<std::string, BoundStatistics> stats;
  for (const auto& reports : per_instance) {
    for (const auto& r : reports) {
      auto& s = stats[r.bound_name];
      s.bound_name = r.bound_name;
      ++s.checked;
      if (!r.holds) {
        ++s.failures;
        summary.failures.push_back(r);
      }
      if (!s.min_slack || r.slack < *s.min_slack) {
        s.min_slack = r.slack;
        s.tightest_instance = r.instance;
      }
    }
  }
  for (auto& [name, s] : stats) summary.per_bound.push_back(std::move(s));
  return summary;
}

}  // namespace fwps
