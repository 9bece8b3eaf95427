#include "toricvol/lp.hpp"

namespace toricvol {

std::optional<RatVector> find_nonnegative_solution(const RatMatrix& a, const RatVector& b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  if (m == 0) return zeros(n);

  // Tableau columns: n structural, m artificial, then rhs.
  const std::size_t width = n + m + 1;
  RatMatrix t(m, zeros(width));
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = flip ? Rational(-b[i]) : b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs of "minimize sum of artificials".
  RatVector cost = zeros(width);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < n || j == width - 1) cost[j] -= t[i][j];

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    Rational f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }

  if (cost[width - 1] != 0) return std::nullopt;
  RatVector x = zeros(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][width - 1];
  return x;
}

bool in_convex_hull(const std::vector<RatVector>& generators, const RatVector& point) {
  if (generators.empty()) return false;
  const std::size_t dim = point.size();
  RatMatrix a(dim + 1, zeros(generators.size()));
  RatVector b(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < generators.size(); ++j) a[i][j] = generators[j][i];
    b[i] = point[i];
  }
  for (std::size_t j = 0; j < generators.size(); ++j) a[dim][j] = 1;
  b[dim] = 1;
  return find_nonnegative_solution(a, b).has_value();
}

}  // namespace toricvol
