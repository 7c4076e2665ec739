#pragma once

// Brute-force reference implementations. Deliberately naive: cofactor
// determinants, Cramer's rule and exhaustive scans, sharing no code with the
// library beyond the Integer/Rational types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <random>
#include <vector>

#include "fwps/arith.hpp"
#include "fwps/lattice.hpp"
#include "fwps/simplex.hpp"

namespace fwps {

inline void PrintTo(const LatticePoint& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const IntegerMatrix& m, std::ostream* os) { *os << m.to_string(); }

}  // namespace fwps

namespace oracle {

using fwps::Integer;
using fwps::Rational;
using Mat = std::vector<std::vector<Integer>>;

inline Integer det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    Integer term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline Mat rows_of(const std::vector<fwps::LatticePoint>& pts) {
  Mat m;
  for (const auto& p : pts) m.emplace_back(p.begin(), p.end());
  return m;
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
                         std::vector<std::size_t>& cur, std::size_t start = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

// gcd of all k x k minors of an r x c matrix.
inline Integer determinantal_divisor(const Mat& m, std::size_t k) {
  const std::size_t r = m.size();
  const std::size_t c = r == 0 ? 0 : m[0].size();
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  combinations(r, k, rs, cur);
  combinations(c, k, cs, cur);
  Integer g = 0;
  for (const auto& ri : rs) {
    for (const auto& ci : cs) {
      Mat sub;
      for (auto a : ri) {
        std::vector<Integer> row;
        for (auto b : ci) row.push_back(m[a][b]);
        sub.push_back(std::move(row));
      }
      const Integer d = det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  }
  return g;
}

// Smith diagonal from determinantal divisors d_k / d_(k-1); zeros trail.
inline std::vector<Integer> smith_diagonal(const Mat& m) {
  const std::size_t r = m.size();
  const std::size_t c = r == 0 ? 0 : m[0].size();
  std::vector<Integer> diag;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    const Integer d = determinantal_divisor(m, k);
    if (d == 0) {
      diag.push_back(0);
      prev = 0;
      continue;
    }
    diag.push_back(d / prev);
    prev = d;
  }
  return diag;
}

// [Z^n : span] as the gcd of maximal minors of the generator matrix; 0 when
// the span is not of full rank.
inline Integer index_by_minors(const std::vector<fwps::LatticePoint>& gens) {
  const std::size_t n = gens.front().dim();
  if (gens.size() < n) return 0;
  return determinantal_divisor(rows_of(gens), n);
}

// Barycentric coordinates of x with respect to the simplex rows of v, by
// Cramer's rule on the (n+1) x (n+1) system sum b_i v_i = x, sum b_i = 1.
inline std::vector<Rational> barycentric(const Mat& v, const std::vector<Integer>& x) {
  const std::size_t n = x.size();
  Mat a(n + 1, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t r = 0; r < n; ++r) a[r][i] = v[i][r];
    a[n][i] = 1;
  }
  const Integer d = det(a);
  std::vector<Rational> b;
  for (std::size_t i = 0; i <= n; ++i) {
    Mat ai = a;
    for (std::size_t r = 0; r < n; ++r) ai[r][i] = x[r];
    ai[n][i] = 1;
    Rational q(det(ai), d);
    q.canonicalize();
    b.push_back(q);
  }
  return b;
}

struct PointCounts {
  std::vector<std::vector<Integer>> all;
  std::vector<std::vector<Integer>> interior;
};

inline PointCounts lattice_points(const std::vector<fwps::LatticePoint>& vertices) {
  const Mat v = rows_of(vertices);
  const std::size_t n = vertices.front().dim();
  std::vector<Integer> lo(n), hi(n);
  for (std::size_t c = 0; c < n; ++c) {
    lo[c] = hi[c] = v[0][c];
    for (const auto& row : v) {
      lo[c] = std::min(lo[c], row[c]);
      hi[c] = std::max(hi[c], row[c]);
    }
  }
  PointCounts out;
  std::vector<Integer> x = lo;
  while (true) {
    const auto b = barycentric(v, x);
    bool inside = true, strict = true;
    for (const auto& q : b) {
      if (q < 0) inside = false;
      if (q <= 0) strict = false;
    }
    if (inside) out.all.push_back(x);
    if (strict) out.interior.push_back(x);
    std::size_t c = 0;
    while (c < n && x[c] == hi[c]) {
      x[c] = lo[c];
      ++c;
    }
    if (c == n) break;
    ++x[c];
  }
  std::sort(out.all.begin(), out.all.end());
  std::sort(out.interior.begin(), out.interior.end());
  return out;
}

// Sum over facets of the volume of the cone over the facet from the origin.
inline Rational volume_by_facets(const std::vector<fwps::LatticePoint>& vertices) {
  const Mat v = rows_of(vertices);
  const std::size_t n = vertices.front().dim();
  Integer total = 0;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    Mat f;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i != skip) f.push_back(v[i]);
    }
    total += abs(det(f));
  }
  Integer nf = 1;
  for (std::size_t i = 2; i <= n; ++i) nf *= static_cast<unsigned long>(i);
  Rational q(total, nf);
  q.canonicalize();
  return q;
}

// Dual vertex i solves u . v_j = -1 for j != i, by Cramer's rule.
inline std::vector<std::vector<Rational>> dual_vertices(const std::vector<fwps::LatticePoint>& vertices) {
  const Mat v = rows_of(vertices);
  const std::size_t n = vertices.front().dim();
  std::vector<std::vector<Rational>> out;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    Mat a;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i != skip) a.push_back(v[i]);
    }
    const Integer d = det(a);
    std::vector<Rational> u;
    for (std::size_t c = 0; c < n; ++c) {
      Mat ac = a;
      for (std::size_t r = 0; r < n; ++r) ac[r][c] = -1;
      Rational q(det(ac), d);
      q.canonicalize();
      u.push_back(q);
    }
    out.push_back(std::move(u));
  }
  return out;
}

// Lower triangular n = 2 matrices with determinant k, positive diagonal and
// the entry below the diagonal reduced modulo the diagonal entry above it,
// filtered out of the full box [-k, k]^3.
inline std::size_t hermite_count_2(long k) {
  std::size_t count = 0;
  for (long a = -k; a <= k; ++a) {
    for (long d = -k; d <= k; ++d) {
      for (long c = -k; c <= k; ++c) {
        if (a <= 0 || d <= 0 || a * d != k) continue;
        if (c < 0 || c >= a) continue;
        ++count;
      }
    }
  }
  return count;
}

inline long divisor_sum(long k) {
  long s = 0;
  for (long d = 1; d <= k; ++d) {
    if (k % d == 0) s += d;
  }
  return s;
}

// Nondecreasing tuples of length n+1 with sum h <= h_max, gcd 1, every
// n-subset coprime and lambda_j | h, by direct enumeration of tuples.
inline std::vector<std::vector<long>> gorenstein_weights(std::size_t n, long h_max) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long remaining, long min_next) -> void {
    if (cur.size() == n + 1) {
      const long h = std::accumulate(cur.begin(), cur.end(), 0L);
      long g = 0;
      for (long x : cur) g = std::gcd(g, x);
      if (g != 1) return;
      for (long x : cur) {
        if (h % x != 0) return;
      }
      for (std::size_t skip = 0; skip <= n; ++skip) {
        long gs = 0;
        for (std::size_t i = 0; i <= n; ++i) {
          if (i != skip) gs = std::gcd(gs, cur[i]);
        }
        if (gs != 1) return;
      }
      out.push_back(cur);
      return;
    }
    for (long x = min_next; x <= remaining; ++x) {
      cur.push_back(x);
      self(self, remaining - x, x);
      cur.pop_back();
    }
  };
  rec(rec, h_max, 1);
  std::sort(out.begin(), out.end());
  return out;
}

struct Triangle {
  std::vector<fwps::LatticePoint> vertices;
};

inline long det2(long a, long b, long c, long d) { return a * d - b * c; }

// Every lattice triangle with vertices in [-bound, bound]^2, primitive
// vertices, the origin as its only interior lattice point and relation
// weights (1,1,1). Each unordered vertex set appears once.
inline std::vector<Triangle> triangles_with_unit_weights(long bound) {
  std::vector<std::pair<long, long>> prim;
  for (long x = -bound; x <= bound; ++x) {
    for (long y = -bound; y <= bound; ++y) {
      if (std::gcd(x, y) == 1) prim.emplace_back(x, y);
    }
  }
  std::vector<Triangle> out;
  for (std::size_t i = 0; i < prim.size(); ++i) {
    for (std::size_t j = i + 1; j < prim.size(); ++j) {
      for (std::size_t k = j + 1; k < prim.size(); ++k) {
        const auto [ax, ay] = prim[i];
        const auto [bx, by] = prim[j];
        const auto [cx, cy] = prim[k];
        // a * det(b,c) + b * det(c,a) + c * det(a,b) = 0.
        const long wa = det2(bx, by, cx, cy);
        const long wb = det2(cx, cy, ax, ay);
        const long wc = det2(ax, ay, bx, by);
        if (wa == 0 || wa != wb || wb != wc) continue;
        const long sign = det2(bx - ax, by - ay, cx - ax, cy - ay) > 0 ? 1 : -1;
        long interior = 0;
        const long lx = std::min({ax, bx, cx}), hx = std::max({ax, bx, cx});
        const long ly = std::min({ay, by, cy}), hy = std::max({ay, by, cy});
        for (long x = lx; x <= hx && interior <= 1; ++x) {
          for (long y = ly; y <= hy; ++y) {
            const long s1 = sign * det2(bx - ax, by - ay, x - ax, y - ay);
            const long s2 = sign * det2(cx - bx, cy - by, x - bx, y - by);
            const long s3 = sign * det2(ax - cx, ay - cy, x - cx, y - cy);
            if (s1 > 0 && s2 > 0 && s3 > 0) ++interior;
          }
        }
        if (interior != 1) continue;
        out.push_back(Triangle{{fwps::LatticePoint{ax, ay}, fwps::LatticePoint{bx, by}, fwps::LatticePoint{cx, cy}}});
      }
    }
  }
  return out;
}

// A product of random elementary operations; determinant +-1.
inline fwps::IntegerMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 12) {
  auto u = fwps::IntegerMatrix::identity(n);
  if (n == 1) {
    if (rng() % 2) u.negate_row(0);
    return u;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> factor(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    if (a == b) b = (b + 1) % n;
    switch (rng() % 4) {
      case 0:
        u.swap_rows(a, b);
        break;
      case 1:
        u.negate_row(a);
        break;
      default:
        u.add_row_multiple(a, b, Integer(factor(rng)));
        break;
    }
  }
  return u;
}

inline std::vector<fwps::LatticePoint> transform(const fwps::IntegerMatrix& u,
                                                 const std::vector<fwps::LatticePoint>& pts) {
  std::vector<fwps::LatticePoint> out;
  for (const auto& p : pts) out.push_back(u * p);
  return out;
}

// Random primitive vertices in a box until they form a valid Fano simplex.
inline fwps::FanoSimplex random_fano_simplex(std::size_t n, std::mt19937_64& rng, long box = 4) {
  std::uniform_int_distribution<long> coord(-box, box);
  while (true) {
    std::vector<fwps::LatticePoint> vs;
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<Integer> c;
      for (std::size_t j = 0; j < n; ++j) c.emplace_back(coord(rng));
      vs.emplace_back(std::move(c));
    }
    try {
      return fwps::FanoSimplex(std::move(vs));
    } catch (const std::exception&) {
    }
  }
}

}  // namespace oracle
