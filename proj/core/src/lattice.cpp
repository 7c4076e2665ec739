#include "fwps/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "fwps/error.hpp"
#include "fwps/weights.hpp"

namespace fwps {

LatticePoint::LatticePoint(std::initializer_list<long> coords) : coords_(coords.begin(), coords.end()) {}

bool LatticePoint::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
}

bool operator<(const LatticePoint& a, const LatticePoint& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

std::string LatticePoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += coords_[i].get_str();
  }
  return out + ")";
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::kInvalidArgument, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::span<const LatticePoint> points) {
  if (points.empty()) return {};
  IntegerMatrix m(points.size(), points.front().dim());
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (points[r].dim() != m.cols_) {
      throw Error(ErrorKind::kInvalidArgument, "points of differing dimension");
    }
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = points[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(std::span<const LatticePoint> points) {
  return from_rows(points).transpose();
}

LatticePoint IntegerMatrix::row(std::size_t r) const {
  return LatticePoint(std::vector<Integer>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_));
}

LatticePoint IntegerMatrix::column(std::size_t c) const {
  std::vector<Integer> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return LatticePoint(std::move(out));
}

std::vector<LatticePoint> IntegerMatrix::row_points() const {
  std::vector<LatticePoint> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntegerMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::kInvalidArgument, "matrix shape mismatch");
  IntegerMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

LatticePoint operator*(const IntegerMatrix& a, const LatticePoint& v) {
  if (a.cols_ != v.dim()) throw Error(ErrorKind::kInvalidArgument, "matrix/vector shape mismatch");
  std::vector<Integer> out(a.rows_, 0);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
  return LatticePoint(std::move(out));
}

bool operator<(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
}

std::string IntegerMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ",";
    out += row(r).to_string();
  }
  return out + "]";
}

Integer determinant(const IntegerMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::kInvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    }
    prev = a(k, k);
  }
  Integer d = a(n - 1, n - 1);
  return sign > 0 ? d : Integer(-d);
}

std::vector<Rational> solve_rational(const IntegerMatrix& a, std::span<const Rational> b) {
  const std::size_t n = a.rows();
  if (!a.is_square() || b.size() != n) throw Error(ErrorKind::kInvalidArgument, "solve: shape mismatch");
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n] = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::kSingularMatrix, "solve: singular matrix");
    std::swap(aug[piv], aug[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      Rational f = aug[i][col] / aug[col][col];
      for (std::size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = aug[i][n] / aug[i][i];
    x[i].canonicalize();
  }
  return x;
}

std::size_t SmithDecomposition::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diag.begin(), diag.end(), [](const Integer& d) { return d != 0; }));
}

namespace {

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  if (m.empty()) throw Error(ErrorKind::kInvalidArgument, "Smith normal form of an empty matrix");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntegerMatrix a = m;
  IntegerMatrix left = IntegerMatrix::identity(rows);
  IntegerMatrix right = IntegerMatrix::identity(cols);
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero |entry| of the trailing block, first in row-major order.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (pr == rows || abs(a(i, j)) < abs(a(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      if (pr == rows) break;
      a.swap_rows(t, pr);
      left.swap_rows(t, pr);
      a.swap_cols(t, pc);
      right.swap_cols(t, pc);

      bool clear = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = -trunc_div(a(i, t), a(t, t));
        a.add_row_multiple(i, t, q);
        left.add_row_multiple(i, t, q);
        if (a(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = -trunc_div(a(t, j), a(t, t));
        a.add_col_multiple(j, t, q);
        right.add_col_multiple(j, t, q);
        if (a(t, j) != 0) clear = false;
      }
      if (!clear) continue;

      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
        }
      if (bad_row == rows) break;
      a.add_row_multiple(t, bad_row, 1);
      left.add_row_multiple(t, bad_row, 1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithDecomposition out{std::move(left), {}, std::move(right)};
  out.diag.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diag.push_back(a(t, t));
  return out;
}

std::optional<Integer> sublattice_index(std::span<const LatticePoint> generators) {
  if (generators.empty()) return std::nullopt;
  const auto snf = smith_normal_form(IntegerMatrix::from_rows(generators));
  const std::size_t n = generators.front().dim();
  if (snf.rank() < n) return std::nullopt;
  Integer index = 1;
  for (const auto& d : snf.diag) index *= d;
  return index;
}

std::vector<Integer> quotient_invariant_factors(std::span<const LatticePoint> generators) {
  if (generators.empty()) throw Error(ErrorKind::kNotFullRank, "not full rank: no generators");
  const auto snf = smith_normal_form(IntegerMatrix::from_rows(generators));
  if (snf.rank() < generators.front().dim()) {
    throw Error(ErrorKind::kNotFullRank, "not full rank");
  }
  std::vector<Integer> factors;
  for (const auto& d : snf.diag)
    if (d > 1) factors.push_back(d);
  return factors;
}

WeightSystem positive_relation(std::span<const LatticePoint> rays) {
  if (rays.empty() || rays.size() != rays.front().dim() + 1) {
    throw Error(ErrorKind::kInvalidArgument, "positive_relation needs n+1 rays in Z^n");
  }
  const std::size_t count = rays.size();
  // Rows of `left` beyond the rank span the left kernel of the ray matrix.
  const auto snf = smith_normal_form(IntegerMatrix::from_rows(rays));
  if (count - snf.rank() != 1) {
    throw Error(ErrorKind::kNotSimplicialRelation, "not simplicial relation: kernel dimension " +
                                                       std::to_string(count - snf.rank()));
  }
  std::vector<Integer> lambda(count);
  for (std::size_t i = 0; i < count; ++i) lambda[i] = snf.left(count - 1, i);
  Integer g = gcd(std::span<const Integer>(lambda));
  const bool negate = lambda.front() < 0;
  for (auto& l : lambda) {
    l /= g;
    if (negate) l = -l;
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (lambda[i] <= 0) {
      throw Error(ErrorKind::kOriginNotInterior,
                  "origin not interior: relation coefficient of ray " + std::to_string(i) + " is " +
                      lambda[i].get_str());
    }
  }
  return WeightSystem(std::move(lambda));
}

bool is_primitive(const LatticePoint& v) { return gcd(v.coords()) == 1; }

IntegerMatrix hermite_reduce(const IntegerMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows < cols || m.empty()) throw Error(ErrorKind::kSingularMatrix, "hermite_reduce: rank deficient");
  IntegerMatrix h = m;
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < rows && pivot < cols; ++i) {
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = pivot; j < cols; ++j) {
        if (h(i, j) != 0 && (best == cols || abs(h(i, j)) < abs(h(i, best)))) best = j;
      }
      if (best == cols) break;
      h.swap_cols(pivot, best);
      bool clear = true;
      for (std::size_t j = pivot + 1; j < cols; ++j) {
        if (h(i, j) == 0) continue;
        h.add_col_multiple(j, pivot, -trunc_div(h(i, j), h(i, pivot)));
        if (h(i, j) != 0) clear = false;
      }
      if (clear) break;
    }
    if (h(i, pivot) == 0) continue;
    if (h(i, pivot) < 0) h.negate_col(pivot);
    for (std::size_t j = 0; j < pivot; ++j) {
      h.add_col_multiple(j, pivot, -floor_div(h(i, j), h(i, pivot)));
    }
    ++pivot;
  }
  if (pivot < cols) throw Error(ErrorKind::kSingularMatrix, "hermite_reduce: singular matrix");
  return h;
}

std::vector<LatticePoint> coordinates_in_basis(const IntegerMatrix& basis,
                                               std::span<const LatticePoint> points) {
  std::vector<LatticePoint> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    std::vector<Rational> rhs(p.begin(), p.end());
    const auto x = solve_rational(basis, rhs);
    std::vector<Integer> coords;
    coords.reserve(x.size());
    for (const auto& xi : x) {
      if (xi.get_den() != 1) {
        throw Error(ErrorKind::kInvalidArgument, "point " + p.to_string() + " is not in the lattice");
      }
      coords.push_back(xi.get_num());
    }
    out.emplace_back(std::move(coords));
  }
  return out;
}

}  // namespace fwps
