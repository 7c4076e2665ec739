#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fwps/arith.hpp"
#include "fwps/lattice.hpp"
#include "fwps/weights.hpp"

namespace fwps {

enum class SingularityClass { kTerminal, kCanonical };

std::string_view to_string(SingularityClass c);

// A point of Q^n.
using RationalPoint = std::vector<Rational>;

// A full-dimensional simplex with rational vertices and the origin in its
// interior.
class RationalSimplex {
 public:
  explicit RationalSimplex(std::vector<RationalPoint> vertices);

  std::size_t dim() const noexcept { return vertices_.size() - 1; }
  const std::vector<RationalPoint>& vertices() const noexcept { return vertices_; }

  // Vertex i of the dual solves u(v_j) = -1 for every j != i.
  RationalSimplex dual() const;
  bool is_integral() const;
  // Integral vertices as lattice points; throws kInvalidArgument otherwise.
  std::vector<LatticePoint> lattice_vertices() const;

  friend bool operator==(const RationalSimplex&, const RationalSimplex&) = default;

 private:
  std::vector<RationalPoint> vertices_;
};

// The local group of one maximal cone of the fan spanned by a simplex.
struct ConeSingularity {
  std::size_t facet_index = 0;  // the omitted vertex
  Integer group_order = 1;
  std::vector<Integer> invariant_factors;
  // Present for nontrivial cyclic groups: the weights a_j (mod r) of the
  // generator, normalized to the lexicographically least representative
  // over unit rescalings and permutations.
  std::optional<std::vector<Integer>> cyclic_weights;
  bool is_smooth = true;

  // "1/5(1,2,3)", "smooth", or "Z/2 x Z/4" for non-cyclic groups.
  std::string type_string() const;
};

// Lexicographically least sorted representative of u*a mod r over units u.
std::vector<Integer> normalize_cyclic_weights(std::span<const Integer> weights, const Integer& order);

// n+1 primitive lattice points in Z^n whose convex hull contains the origin
// in its interior. Immutable; weights, multiplicity and the facet
// inequalities are computed on construction.
class FanoSimplex {
 public:
  // Throws kNotFullDimensional, kOriginNotInterior or kVertexNotPrimitive.
  explicit FanoSimplex(std::vector<LatticePoint> vertices);

  std::size_t dim() const noexcept { return vertices_.size() - 1; }
  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  const WeightSystem& weights() const noexcept { return weights_; }
  const Integer& multiplicity() const noexcept { return multiplicity_; }
  IntegerMatrix vertex_matrix() const { return IntegerMatrix::from_rows(vertices_); }

  Rational normalized_volume() const;
  std::vector<Integer> facet_lattice_volumes() const;

  // Sorted lexicographically.
  std::vector<LatticePoint> lattice_points() const;
  std::vector<LatticePoint> interior_lattice_points() const;
  std::size_t interior_point_count() const;

  bool contains(const LatticePoint& x) const;
  bool contains_in_interior(const LatticePoint& x) const;

  bool is_canonical() const;
  bool is_terminal() const;

  RationalSimplex dual() const;
  bool is_reflexive() const;
  Rational degree() const;
  std::vector<Integer> quotient_group() const;
  std::vector<ConeSingularity> cone_singularities() const;

  friend bool operator==(const FanoSimplex& a, const FanoSimplex& b) { return a.vertices_ == b.vertices_; }

 private:
  struct Facet {
    // The facet omitting vertex i is {x : normal . x = -offset}; the simplex
    // lies on the side normal . x >= -offset. offset > 0, gcd(normal, offset) = 1.
    std::vector<Integer> normal;
    Integer offset;
  };

  template <typename Visit>
  void scan_box(Visit&& visit) const;

  std::vector<LatticePoint> vertices_;
  WeightSystem weights_;
  Integer multiplicity_;
  std::vector<Facet> facets_;
};

bool has_class(const FanoSimplex& p, SingularityClass c);

}  // namespace fwps
