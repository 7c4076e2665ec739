#include "fwps/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "fwps/bounds.hpp"
#include "fwps/error.hpp"
#include "fwps/wps.hpp"

namespace fwps {

HermiteMatrix::HermiteMatrix(IntegerMatrix entries) : entries_(std::move(entries)), det_(1) {
  if (!entries_.is_square() || entries_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "Hermite matrix must be square and nonempty");
  }
  const std::size_t n = entries_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = entries_(i, i);
    if (d < 1) throw Error(ErrorKind::kInvalidArgument, "Hermite diagonal must be positive");
    det_ *= d;
    for (std::size_t j = i + 1; j < n; ++j)
      if (entries_(i, j) != 0) throw Error(ErrorKind::kInvalidArgument, "Hermite matrix must be lower triangular");
    for (std::size_t r = i + 1; r < n; ++r)
      if (entries_(r, i) < 0 || entries_(r, i) >= d) {
        throw Error(ErrorKind::kInvalidArgument, "Hermite column entries must lie in [0, diagonal)");
      }
  }
}

namespace {

void ordered_factorizations(const Integer& k, std::size_t parts, std::vector<Integer>& prefix,
                            std::vector<std::vector<Integer>>& out) {
  if (parts == 1) {
    prefix.push_back(k);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (Integer d = 1; d <= k; ++d) {
    if (!mpz_divisible_p(k.get_mpz_t(), d.get_mpz_t())) continue;
    prefix.push_back(d);
    ordered_factorizations(Integer(k / d), parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<HermiteMatrix> enumerate_hermite(std::size_t n, const Integer& k) {
  if (n == 0 || k < 1) throw Error(ErrorKind::kInvalidArgument, "enumerate_hermite needs n >= 1 and k >= 1");
  std::vector<std::vector<Integer>> diagonals;
  std::vector<Integer> prefix;
  ordered_factorizations(k, n, prefix, diagonals);

  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (row, col) below the diagonal, row-major
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) slots.emplace_back(i, j);

  std::vector<HermiteMatrix> out;
  for (const auto& diag : diagonals) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = diag[i];
    for (;;) {
      out.emplace_back(m);
      bool advanced = false;
      for (std::size_t s = slots.size(); s > 0 && !advanced;) {
        --s;
        auto [r, c] = slots[s];
        if (m(r, c) + 1 < diag[c]) {
          ++m(r, c);
          advanced = true;
        } else {
          m(r, c) = 0;
        }
      }
      if (!advanced) break;
    }
  }
  return out;
}

std::optional<FanoSimplex> apply_hermite(const HermiteMatrix& h, const FanoSimplex& p) {
  if (p.multiplicity() != 1) {
    throw Error(ErrorKind::kInvalidArgument, "apply_hermite expects a weighted projective space simplex");
  }
  std::vector<LatticePoint> images;
  images.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    auto image = h.entries() * v;
    if (!is_primitive(image)) return std::nullopt;
    images.push_back(std::move(image));
  }
  return FanoSimplex(std::move(images));
}

IntegerMatrix normal_form(const FanoSimplex& p) {
  const auto& vertices = p.vertices();
  std::vector<std::size_t> order(vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::optional<IntegerMatrix> best;
  IntegerMatrix permuted(vertices.size(), p.dim());
  do {
    for (std::size_t r = 0; r < order.size(); ++r)
      for (std::size_t c = 0; c < p.dim(); ++c) permuted(r, c) = vertices[order[r]][c];
    IntegerMatrix h = hermite_reduce(permuted);
    if (!best || h < *best) best = std::move(h);
  } while (std::next_permutation(order.begin(), order.end()));
  return *best;
}

std::string_view to_string(EnumerationClass c) {
  switch (c) {
    case EnumerationClass::kTerminal:
      return "terminal";
    case EnumerationClass::kCanonical:
      return "canonical";
    case EnumerationClass::kGorenstein:
      return "gorenstein";
    case EnumerationClass::kAll:
      return "all";
  }
  return "all";
}

std::optional<EnumerationClass> parse_enumeration_class(std::string_view text) {
  for (auto c : {EnumerationClass::kTerminal, EnumerationClass::kCanonical, EnumerationClass::kGorenstein,
                 EnumerationClass::kAll}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

ClassificationRecord make_record(const FanoSimplex& p) {
  IntegerMatrix nf = normal_form(p);
  FanoSimplex canonical_simplex(nf.row_points());
  ClassificationRecord r{.normal_form_vertices = std::move(nf),
                         .weights = canonical_simplex.weights(),
                         .multiplicity = canonical_simplex.multiplicity()};
  r.canonical = canonical_simplex.is_canonical();
  r.terminal = r.canonical && canonical_simplex.is_terminal();
  r.reflexive = canonical_simplex.is_reflexive();
  r.degree = canonical_simplex.degree();
  r.quotient = canonical_simplex.quotient_group();
  r.cone_singularities = canonical_simplex.cone_singularities();
  return r;
}

namespace {

bool passes(const FanoSimplex& p, EnumerationClass cls) {
  switch (cls) {
    case EnumerationClass::kTerminal:
      return p.is_terminal();
    case EnumerationClass::kCanonical:
      return p.is_canonical();
    case EnumerationClass::kGorenstein:
      return p.is_reflexive();
    case EnumerationClass::kAll:
      return true;
  }
  return true;
}

void check_record(const ClassificationRecord& r, const WeightSystem& w) {
  const std::size_t n = r.weights.dim();
  const auto p = r.simplex();
  if (p.normalized_volume() * Rational(factorial(static_cast<unsigned>(n))) !=
      Rational(r.weights.h() * r.multiplicity)) {
    throw Error(ErrorKind::kInternal, "volume identity violated by " + r.normal_form_vertices.to_string());
  }
  if (!r.weights.same_multiset(w)) {
    throw Error(ErrorKind::kInternal, "weights not preserved by " + r.normal_form_vertices.to_string());
  }
}

}  // namespace

EnumerationResult enumerate_fake_wps(const WeightSystem& w, EnumerationClass cls, const EnumerationOptions& options) {
  EnumerationResult result;
  if (options.mult_cap) {
    if (*options.mult_cap < 1) throw Error(ErrorKind::kInvalidArgument, "multiplicity cap must be positive");
    result.mult_cap = *options.mult_cap;
  } else if (cls == EnumerationClass::kAll) {
    throw Error(ErrorKind::kMissingBound, "class 'all' requires an explicit multiplicity cap");
  } else {
    const Rational bound = canonical_mult_bound(w);
    result.mult_cap = floor_div(bound.get_num(), bound.get_den());
  }

  const FanoSimplex base = wps_simplex(w);
  if (!passes(base, cls)) {
    result.short_circuited = true;
    result.log.push_back("P" + w.to_string() + " is not " + std::string(to_string(cls)) +
                         "; no fake weighted projective space with these weights can be");
    return result;
  }

  std::vector<HermiteMatrix> tasks;
  for (Integer k = 1; k <= result.mult_cap; ++k) {
    auto level = enumerate_hermite(base.dim(), k);
    std::move(level.begin(), level.end(), std::back_inserter(tasks));
  }
  result.candidates = tasks.size();

  struct Partial {
    std::map<IntegerMatrix, FanoSimplex> found;
    std::size_t non_primitive = 0;
    std::size_t wrong_class = 0;
  };
  const unsigned threads = std::max(1u, options.threads);
  std::vector<Partial> partials(threads);
  auto work = [&](unsigned t) {
    auto& part = partials[t];
    for (std::size_t i = t; i < tasks.size(); i += threads) {
      auto candidate = apply_hermite(tasks[i], base);
      if (!candidate) {
        ++part.non_primitive;
        continue;
      }
      if (!passes(*candidate, cls)) {
        ++part.wrong_class;
        continue;
      }
      part.found.try_emplace(normal_form(*candidate), std::move(*candidate));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(work, t);
  }

  std::map<IntegerMatrix, FanoSimplex> merged;
  for (auto& part : partials) {
    result.rejected_non_primitive += part.non_primitive;
    result.rejected_class += part.wrong_class;
    merged.merge(part.found);
  }

  const auto sorted = w.sorted();
  Integer all_weights = 1;
  for (const auto& l : sorted.lambdas()) all_weights *= l;
  const Integer h_power = pow(sorted.h(), sorted.dim() - 1);

  for (const auto& [nf, simplex] : merged) {
    auto record = make_record(simplex);
    check_record(record, w);
    const Rational ratio = make_rational(record.multiplicity * all_weights, h_power);
    if (!result.max_conjecture_ratio || ratio > *result.max_conjecture_ratio) result.max_conjecture_ratio = ratio;
    result.records.push_back(std::move(record));
  }
  std::stable_sort(result.records.begin(), result.records.end(),
                   [](const ClassificationRecord& a, const ClassificationRecord& b) {
                     if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
                     return a.normal_form_vertices < b.normal_form_vertices;
                   });
  return result;
}

FanoSimplex cyclic_quotient(const FanoSimplex& p, std::span<const Integer> action_weights, const Integer& order) {
  const std::size_t n = p.dim();
  if (action_weights.size() != p.vertices().size() || order < 1) {
    throw Error(ErrorKind::kInvalidArgument, "cyclic_quotient needs one action weight per vertex");
  }
  // Work in order * N' so everything stays integral.
  std::vector<LatticePoint> generators;
  for (std::size_t j = 0; j < n; ++j) {
    LatticePoint e = LatticePoint::zero(n);
    e[j] = order;
    generators.push_back(std::move(e));
  }
  LatticePoint g = LatticePoint::zero(n);
  for (std::size_t i = 0; i < action_weights.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) g[j] += action_weights[i] * p.vertices()[i][j];
  generators.push_back(std::move(g));

  const IntegerMatrix gen = IntegerMatrix::from_rows(generators);
  const auto snf = smith_normal_form(gen);
  // Rows of left * gen span the same lattice; the first n form a basis.
  const IntegerMatrix reduced = snf.left * gen;
  IntegerMatrix basis(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) basis(c, r) = reduced(r, c);

  std::vector<LatticePoint> scaled;
  for (const auto& v : p.vertices()) {
    LatticePoint s = v;
    for (std::size_t j = 0; j < n; ++j) s[j] *= order;
    scaled.push_back(std::move(s));
  }
  return FanoSimplex(coordinates_in_basis(basis, scaled));
}

CrosscheckResult example3_crosscheck() {
  const FanoSimplex p3({LatticePoint{1, 0, 0}, LatticePoint{0, 1, 0}, LatticePoint{0, 0, 1}, LatticePoint{-1, -1, -1}});
  const std::vector<Integer> action{1, 2, 3, 4};
  FanoSimplex quotient = cyclic_quotient(p3, action, Integer(5));
  IntegerMatrix nf = normal_form(quotient);
  const auto catalog = enumerate_fake_wps(WeightSystem{1, 1, 1, 1}, EnumerationClass::kTerminal);
  const bool matches = std::any_of(catalog.records.begin(), catalog.records.end(),
                                   [&](const ClassificationRecord& r) { return r.normal_form_vertices == nf; });
  return CrosscheckResult{std::move(quotient), std::move(nf), matches};
}

}  // namespace fwps
