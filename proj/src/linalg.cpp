#include "barbell/linalg.hpp"

#include <utility>

#include "barbell/errors.hpp"

namespace barbell::linalg {

namespace {

struct Echelon {
  Matrix h;                                      // A U, column echelon form
  Matrix u;                                      // unimodular column transform
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};

Integer reduce(const Integer& x, Coefficients coeffs) {
  if (coeffs == Coefficients::Integers) return x;
  Integer r = x % 2;
  return r < 0 ? Integer(r + 2) : r;
}

// Column operation: (col i, col j) <- (a*col i + b*col j, c*col i + d*col j).
void combine(Matrix& m, std::size_t i, std::size_t j, const Integer& a, const Integer& b, const Integer& c,
             const Integer& d, Coefficients coeffs) {
  for (auto& row : m) {
    Integer x = row[i];
    Integer y = row[j];
    row[i] = reduce(a * x + b * y, coeffs);
    row[j] = reduce(c * x + d * y, coeffs);
  }
}

Echelon columnEchelon(const Matrix& a, std::size_t cols, Coefficients coeffs) {
  Echelon e;
  e.h = a;
  for (auto& row : e.h) {
    if (row.size() != cols) throw InvalidArgument("ragged matrix");
    for (auto& x : row) x = reduce(x, coeffs);
  }
  e.u.assign(cols, Vector(cols));
  for (std::size_t i = 0; i < cols; ++i) e.u[i][i] = 1;

  std::size_t pc = 0;
  for (std::size_t r = 0; r < e.h.size() && pc < cols; ++r) {
    for (std::size_t j = pc + 1; j < cols; ++j) {
      const Integer x = e.h[r][pc];
      const Integer y = e.h[r][j];
      if (y == 0) continue;
      // g = s x + t y; new pc column gets g, column j gets 0.
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      const Integer xg = x / g;
      const Integer yg = y / g;
      combine(e.h, pc, j, s, t, -yg, xg, coeffs);
      combine(e.u, pc, j, s, t, -yg, xg, coeffs);
    }
    if (e.h[r][pc] != 0) {
      e.pivots.emplace_back(r, pc);
      ++pc;
    }
  }
  return e;
}

}  // namespace

std::optional<Vector> solve(const Matrix& a, const Vector& b, std::size_t cols, Coefficients coeffs) {
  if (b.size() != a.size()) throw InvalidArgument("right-hand side length mismatch");
  Echelon e = columnEchelon(a, cols, coeffs);
  Vector residual(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) residual[i] = reduce(b[i], coeffs);
  Vector y(cols);
  std::size_t next = 0;
  for (std::size_t r = 0; r < residual.size(); ++r) {
    if (next < e.pivots.size() && e.pivots[next].first == r) {
      const std::size_t c = e.pivots[next].second;
      const Integer& p = e.h[r][c];
      if (coeffs == Coefficients::Integers && residual[r] % p != 0) return std::nullopt;
      // Over F2 the pivot is 1.
      const Integer q = coeffs == Coefficients::Integers ? Integer(residual[r] / p) : residual[r];
      y[c] = q;
      for (std::size_t i = 0; i < residual.size(); ++i) residual[i] = reduce(residual[i] - q * e.h[i][c], coeffs);
      ++next;
    } else if (residual[r] != 0) {
      return std::nullopt;
    }
  }
  Vector x(cols);
  for (std::size_t i = 0; i < cols; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < cols; ++j) s += e.u[i][j] * y[j];
    x[i] = reduce(s, coeffs);
  }
  return x;
}

std::size_t rank(const Matrix& a, std::size_t cols, Coefficients coeffs) {
  return columnEchelon(a, cols, coeffs).pivots.size();
}

}  // namespace barbell::linalg
