#include "fwps/wps.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "fwps/bounds.hpp"
#include "fwps/error.hpp"

namespace fwps {

bool is_well_formed(const WeightSystem& w) {
  for (std::size_t omit = 0; omit < w.size(); ++omit) {
    Integer g = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i != omit) g = gcd(g, w[i]);
    if (g != 1) return false;
  }
  return true;
}

bool is_gorenstein_weights(const WeightSystem& w) {
  return std::all_of(w.lambdas().begin(), w.lambdas().end(),
                     [&](const Integer& l) { return mpz_divisible_p(w.h().get_mpz_t(), l.get_mpz_t()) != 0; });
}

FanoSimplex wps_simplex(const WeightSystem& w) {
  if (!is_well_formed(w)) {
    throw Error(ErrorKind::kWeightsNotWellFormed, "weights not well-formed: " + w.to_string());
  }
  const std::size_t n = w.dim();
  IntegerMatrix column(n + 1, 1);
  for (std::size_t i = 0; i <= n; ++i) column(i, 0) = w[i];
  // left * lambda = e_0, so rows 1..n of `left` realize the quotient map.
  const auto snf = smith_normal_form(column);
  IntegerMatrix images(n + 1, n);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t r = 0; r < n; ++r) images(i, r) = snf.left(r + 1, i);
  return FanoSimplex(hermite_reduce(images).row_points());
}

SylvesterTable sylvester(std::size_t upto) {
  SylvesterTable table;
  Integer product = 1;
  for (std::size_t k = 0; k <= upto; ++k) {
    Integer y = k == 0 ? Integer(2) : Integer(product + 1);
    product *= y;
    table.t.push_back(y - 1);
    table.y.push_back(std::move(y));
  }
  return table;
}

namespace {

// Unit partitions 1/m_0 + ... + 1/m_(terms-1) = remaining with
// m nondecreasing.
void unit_partitions(const Rational& remaining, std::size_t terms, const Integer& min_m, std::vector<Integer>& prefix,
                     std::vector<std::vector<Integer>>& out) {
  const Integer& num = remaining.get_num();
  const Integer& den = remaining.get_den();
  if (terms == 1) {
    if (num == 1 && den >= min_m) {
      prefix.push_back(den);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  // 1/m < remaining, and terms/m >= remaining.
  Integer m = std::max<Integer>(min_m, floor_div(den, num) + 1);
  const Integer upper = floor_div(Integer(den * static_cast<unsigned long>(terms)), num);
  for (; m <= upper; ++m) {
    prefix.push_back(m);
    Rational rest = remaining - Rational(Integer(1), m);
    rest.canonicalize();
    unit_partitions(rest, terms - 1, m, prefix, out);
    prefix.pop_back();
  }
}

// Nondecreasing tuples of `count` positive integers summing to `total`.
void nondecreasing_tuples(const Integer& total, std::size_t count, const Integer& min_part, std::vector<Integer>& prefix,
                          const std::function<void(const std::vector<Integer>&)>& emit) {
  if (count == 1) {
    if (total >= min_part) {
      prefix.push_back(total);
      emit(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (Integer part = min_part; part * static_cast<unsigned long>(count) <= total; ++part) {
    prefix.push_back(part);
    nondecreasing_tuples(total - part, count - 1, part, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<WeightSystem> enumerate_gorenstein_weights(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "dimension must be positive");
  std::vector<std::vector<Integer>> partitions;
  std::vector<Integer> prefix;
  unit_partitions(Rational(1), n + 1, Integer(1), prefix, partitions);

  const Integer t_n = sylvester(n).t[n];
  std::set<WeightSystem> found;
  for (const auto& ms : partitions) {
    Integer h = 1;
    for (const auto& m : ms) h = lcm(h, m);
    if (h > t_n) throw Error(ErrorKind::kInternal, "Gorenstein weight system exceeds the Sylvester bound");
    std::vector<Integer> lambdas;
    for (const auto& m : ms) lambdas.push_back(h / m);
    WeightSystem w = WeightSystem(std::move(lambdas)).sorted();
    if (is_well_formed(w)) found.insert(std::move(w));
  }
  return {found.begin(), found.end()};
}

std::vector<WeightSystem> search_weights(std::size_t n, const Integer& h_max, SingularityClass cls,
                                         const SearchOptions& options, SearchStats* stats) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "dimension must be positive");
  const Integer h_min = static_cast<unsigned long>(n + 1);

  std::vector<Integer> totals;
  for (Integer h = h_min; h <= h_max; ++h) totals.push_back(h);

  std::mutex mu;
  std::set<WeightSystem> found;
  SearchStats total_stats;

  auto work = [&](std::size_t first, std::size_t stride) {
    SearchStats local;
    std::set<WeightSystem> local_found;
    std::vector<Integer> prefix;
    for (std::size_t i = first; i < totals.size(); i += stride) {
      nondecreasing_tuples(totals[i], n + 1, Integer(1), prefix, [&](const std::vector<Integer>& tuple) {
        if (gcd(std::span<const Integer>(tuple)) != 1) return;
        WeightSystem w(tuple);
        if (!is_well_formed(w)) return;
        ++local.candidates;
        if (options.barycentric_prefilter) {
          for (const auto& r : barycentric_bound(w, cls)) {
            if (!r.holds) {
              ++local.prefiltered;
              return;
            }
          }
        }
        if (options.lambda0_prefilter && !lambda0_lower_bound(w).holds) {
          ++local.prefiltered;
          return;
        }
        ++local.exact_checks;
        if (has_class(wps_simplex(w), cls)) local_found.insert(std::move(w));
      });
    }
    std::lock_guard lock(mu);
    found.merge(local_found);
    total_stats.candidates += local.candidates;
    total_stats.prefiltered += local.prefiltered;
    total_stats.exact_checks += local.exact_checks;
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(work, t, threads);
  }
  if (stats) *stats = total_stats;
  return {found.begin(), found.end()};
}

}  // namespace fwps
