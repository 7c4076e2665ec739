#include "fwps/simplex.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "fwps/error.hpp"

namespace fwps {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Gaussian elimination over Q; nullopt when singular.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    b[i] /= a[i][i];
    b[i].canonicalize();
  }
  return b;
}

// The point u with u . v_j = -1 for all j != omit.
std::optional<RationalPoint> dual_vertex(const std::vector<RationalPoint>& vertices, std::size_t omit) {
  RationalMatrix a;
  for (std::size_t j = 0; j < vertices.size(); ++j)
    if (j != omit) a.push_back(vertices[j]);
  std::vector<Rational> rhs(a.size(), Rational(-1));
  return solve(std::move(a), std::move(rhs));
}

std::vector<RationalPoint> to_rational(const std::vector<LatticePoint>& points) {
  std::vector<RationalPoint> out;
  out.reserve(points.size());
  for (const auto& p : points) out.emplace_back(p.begin(), p.end());
  return out;
}

WeightSystem validated_weights(const std::vector<LatticePoint>& vertices) {
  if (vertices.size() < 2) {
    throw Error(ErrorKind::kNotFullDimensional, "not full-dimensional: need n+1 >= 2 vertices");
  }
  const std::size_t n = vertices.size() - 1;
  for (const auto& v : vertices) {
    if (v.dim() != n) {
      throw Error(ErrorKind::kNotFullDimensional,
                  "not full-dimensional: expected " + std::to_string(n + 1) + " vertices in Z^" +
                      std::to_string(n) + ", got a vertex of dimension " + std::to_string(v.dim()));
    }
  }
  IntegerMatrix edges(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) edges(i, j) = vertices[i + 1][j] - vertices[0][j];
  if (determinant(edges) == 0) {
    throw Error(ErrorKind::kNotFullDimensional, "not full-dimensional: edge vectors are dependent");
  }
  std::optional<WeightSystem> weights;
  try {
    weights.emplace(positive_relation(vertices));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kNotSimplicialRelation || e.kind() == ErrorKind::kOriginNotInterior) {
      throw Error(ErrorKind::kOriginNotInterior, "origin not interior");
    }
    throw;
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!is_primitive(vertices[i])) {
      throw Error(ErrorKind::kVertexNotPrimitive,
                  "vertex not primitive: vertex " + std::to_string(i) + " " + vertices[i].to_string());
    }
  }
  return *weights;
}

}  // namespace

std::string_view to_string(SingularityClass c) {
  return c == SingularityClass::kTerminal ? "terminal" : "canonical";
}

bool has_class(const FanoSimplex& p, SingularityClass c) {
  return c == SingularityClass::kTerminal ? p.is_terminal() : p.is_canonical();
}

RationalSimplex::RationalSimplex(std::vector<RationalPoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw Error(ErrorKind::kNotFullDimensional, "not full-dimensional");
  const std::size_t n = vertices_.size() - 1;
  for (const auto& v : vertices_)
    if (v.size() != n) throw Error(ErrorKind::kNotFullDimensional, "not full-dimensional");
  // Barycentric coordinates of the origin: sum beta_i v_i = 0, sum beta_i = 1.
  RationalMatrix a(n + 1, std::vector<Rational>(n + 1));
  std::vector<Rational> b(n + 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= n; ++j) a[i][j] = vertices_[j][i];
  for (std::size_t j = 0; j <= n; ++j) a[n][j] = 1;
  b[n] = 1;
  const auto beta = solve(std::move(a), std::move(b));
  if (!beta) throw Error(ErrorKind::kNotFullDimensional, "not full-dimensional");
  for (const auto& x : *beta)
    if (x <= 0) throw Error(ErrorKind::kOriginNotInterior, "origin not interior");
}

RationalSimplex RationalSimplex::dual() const {
  std::vector<RationalPoint> out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    auto u = dual_vertex(vertices_, i);
    if (!u) throw Error(ErrorKind::kInternal, "dual: degenerate facet");
    out.push_back(std::move(*u));
  }
  return RationalSimplex(std::move(out));
}

bool RationalSimplex::is_integral() const {
  return std::all_of(vertices_.begin(), vertices_.end(), [](const RationalPoint& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.get_den() == 1; });
  });
}

std::vector<LatticePoint> RationalSimplex::lattice_vertices() const {
  if (!is_integral()) throw Error(ErrorKind::kInvalidArgument, "simplex has non-integral vertices");
  std::vector<LatticePoint> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) {
    std::vector<Integer> coords;
    for (const auto& x : v) coords.push_back(x.get_num());
    out.emplace_back(std::move(coords));
  }
  return out;
}

std::string ConeSingularity::type_string() const {
  if (is_smooth) return "smooth";
  std::string out;
  if (cyclic_weights) {
    out = "1/" + group_order.get_str() + "(";
    for (std::size_t i = 0; i < cyclic_weights->size(); ++i) {
      if (i) out += ",";
      out += (*cyclic_weights)[i].get_str();
    }
    return out + ")";
  }
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) out += " x ";
    out += "Z/" + invariant_factors[i].get_str();
  }
  return out;
}

std::vector<Integer> normalize_cyclic_weights(std::span<const Integer> weights, const Integer& order) {
  if (order <= 1) return std::vector<Integer>(weights.size(), 0);
  std::vector<Integer> best;
  for (Integer u = 1; u < order; ++u) {
    if (gcd(u, order) != 1) continue;
    std::vector<Integer> candidate;
    candidate.reserve(weights.size());
    for (const auto& a : weights) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), Integer(u * a).get_mpz_t(), order.get_mpz_t());
      candidate.push_back(std::move(r));
    }
    std::sort(candidate.begin(), candidate.end());
    if (best.empty() || candidate < best) best = std::move(candidate);
  }
  return best;
}

FanoSimplex::FanoSimplex(std::vector<LatticePoint> vertices)
    : vertices_(std::move(vertices)), weights_(validated_weights(vertices_)) {
  multiplicity_ = *sublattice_index(vertices_);
  const auto rational = to_rational(vertices_);
  facets_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto u = dual_vertex(rational, i);
    if (!u) throw Error(ErrorKind::kInternal, "facet normal of a valid simplex is undefined");
    Integer den = 1;
    for (const auto& x : *u) den = lcm(den, x.get_den());
    Facet f{{}, den};
    for (const auto& x : *u) f.normal.push_back(x.get_num() * (den / x.get_den()));
    facets_.push_back(std::move(f));
  }
}

Rational FanoSimplex::normalized_volume() const {
  const std::size_t n = dim();
  IntegerMatrix edges(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) edges(i, j) = vertices_[i + 1][j] - vertices_[0][j];
  return make_rational(abs(determinant(edges)), factorial(static_cast<unsigned>(n)));
}

std::vector<Integer> FanoSimplex::facet_lattice_volumes() const {
  std::vector<Integer> out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    std::vector<LatticePoint> facet;
    for (std::size_t j = 0; j < vertices_.size(); ++j)
      if (j != i) facet.push_back(vertices_[j]);
    out.push_back(abs(determinant(IntegerMatrix::from_rows(facet))));
  }
  return out;
}

bool FanoSimplex::contains(const LatticePoint& x) const {
  for (const auto& f : facets_) {
    Integer dot = 0;
    for (std::size_t j = 0; j < x.dim(); ++j) dot += f.normal[j] * x[j];
    if (dot < -f.offset) return false;
  }
  return true;
}

bool FanoSimplex::contains_in_interior(const LatticePoint& x) const {
  for (const auto& f : facets_) {
    Integer dot = 0;
    for (std::size_t j = 0; j < x.dim(); ++j) dot += f.normal[j] * x[j];
    if (dot <= -f.offset) return false;
  }
  return true;
}

// Calls visit(coords, interior) for every lattice point of the simplex, in
// lexicographic order. Uses 64-bit arithmetic when every dot product is
// provably in range.
template <typename Visit>
void FanoSimplex::scan_box(Visit&& visit) const {
  const std::size_t n = dim();
  std::vector<Integer> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = hi[j] = vertices_[0][j];
    for (const auto& v : vertices_) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }
  }

  Integer max_coord = 0, max_normal = 0, max_offset = 0;
  for (std::size_t j = 0; j < n; ++j) {
    max_coord = std::max<Integer>(max_coord, abs(lo[j]));
    max_coord = std::max<Integer>(max_coord, abs(hi[j]));
  }
  for (const auto& f : facets_) {
    for (const auto& c : f.normal) max_normal = std::max<Integer>(max_normal, abs(c));
    max_offset = std::max<Integer>(max_offset, f.offset);
  }
  const Integer worst = max_normal * max_coord * static_cast<unsigned long>(n) + max_offset;
  const bool fast = worst < Integer(std::numeric_limits<std::int64_t>::max() / 4);

  if (fast) {
    std::vector<std::int64_t> l(n), u(n), x(n), off;
    std::vector<std::vector<std::int64_t>> normals;
    for (std::size_t j = 0; j < n; ++j) {
      l[j] = *to_int64(lo[j]);
      u[j] = *to_int64(hi[j]);
    }
    for (const auto& f : facets_) {
      std::vector<std::int64_t> row;
      for (const auto& c : f.normal) row.push_back(*to_int64(c));
      normals.push_back(std::move(row));
      off.push_back(*to_int64(f.offset));
    }
    x = l;
    for (;;) {
      bool inside = true, interior = true;
      for (std::size_t i = 0; i < normals.size() && inside; ++i) {
        std::int64_t dot = 0;
        for (std::size_t j = 0; j < n; ++j) dot += normals[i][j] * x[j];
        if (dot < -off[i]) inside = false;
        else if (dot == -off[i]) interior = false;
      }
      if (inside) visit(std::span<const std::int64_t>(x), interior);
      std::size_t k = n;
      while (k > 0) {
        --k;
        if (x[k] < u[k]) {
          ++x[k];
          break;
        }
        x[k] = l[k];
        if (k == 0) return;
      }
    }
  }

  std::vector<Integer> x = lo;
  for (;;) {
    bool inside = true, interior = true;
    for (std::size_t i = 0; i < facets_.size() && inside; ++i) {
      Integer dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += facets_[i].normal[j] * x[j];
      if (dot < -facets_[i].offset) inside = false;
      else if (dot == -facets_[i].offset) interior = false;
    }
    if (inside) visit(std::span<const Integer>(x), interior);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (x[k] < hi[k]) {
        ++x[k];
        break;
      }
      x[k] = lo[k];
      if (k == 0) return;
    }
  }
}

namespace {

template <typename T>
LatticePoint to_point(std::span<const T> x) {
  std::vector<Integer> coords;
  coords.reserve(x.size());
  for (const auto& c : x) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
      coords.emplace_back(static_cast<long>(c));
    } else {
      coords.push_back(c);
    }
  }
  return LatticePoint(std::move(coords));
}

}  // namespace

std::vector<LatticePoint> FanoSimplex::lattice_points() const {
  std::vector<LatticePoint> out;
  scan_box([&](auto x, bool) { out.push_back(to_point(x)); });
  return out;
}

std::vector<LatticePoint> FanoSimplex::interior_lattice_points() const {
  std::vector<LatticePoint> out;
  scan_box([&](auto x, bool interior) {
    if (interior) out.push_back(to_point(x));
  });
  return out;
}

std::size_t FanoSimplex::interior_point_count() const {
  std::size_t count = 0;
  scan_box([&](auto, bool interior) { count += interior ? 1 : 0; });
  return count;
}

bool FanoSimplex::is_canonical() const { return interior_point_count() == 1; }

bool FanoSimplex::is_terminal() const {
  std::size_t count = 0;
  scan_box([&](auto, bool) { ++count; });
  return count == vertices_.size() + 1;
}

RationalSimplex FanoSimplex::dual() const {
  std::vector<RationalPoint> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) {
    RationalPoint u;
    for (const auto& c : f.normal) u.push_back(make_rational(c, f.offset));
    out.push_back(std::move(u));
  }
  return RationalSimplex(std::move(out));
}

bool FanoSimplex::is_reflexive() const {
  return std::all_of(facets_.begin(), facets_.end(), [](const Facet& f) { return f.offset == 1; });
}

Rational FanoSimplex::degree() const {
  Integer den = multiplicity_;
  for (const auto& l : weights_.lambdas()) den *= l;
  return make_rational(pow(weights_.h(), dim()), den);
}

std::vector<Integer> FanoSimplex::quotient_group() const { return quotient_invariant_factors(vertices_); }

std::vector<ConeSingularity> FanoSimplex::cone_singularities() const {
  const std::size_t n = dim();
  std::vector<ConeSingularity> out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    std::vector<LatticePoint> generators;
    for (std::size_t j = 0; j < vertices_.size(); ++j)
      if (j != i) generators.push_back(vertices_[j]);
    // left * G * right = D with G's columns the generators. The quotient
    // generator is G * right * D^{-1} e_n, i.e. sum_j right(j, n-1)/r * g_j.
    const auto snf = smith_normal_form(IntegerMatrix::from_columns(generators));
    ConeSingularity cone;
    cone.facet_index = i;
    cone.group_order = 1;
    for (const auto& d : snf.diag) {
      cone.group_order *= d;
      if (d > 1) cone.invariant_factors.push_back(d);
    }
    cone.is_smooth = cone.group_order == 1;
    if (!cone.is_smooth && cone.invariant_factors.size() == 1) {
      std::vector<Integer> a;
      a.reserve(n);
      for (std::size_t j = 0; j < n; ++j) a.push_back(snf.right(j, n - 1));
      cone.cyclic_weights = normalize_cyclic_weights(a, cone.group_order);
    }
    out.push_back(std::move(cone));
  }
  return out;
}

}  // namespace fwps
