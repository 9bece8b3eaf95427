#include "toricvol/rational.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "toricvol/error.hpp"

namespace toricvol {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::NotLattice: return "NotLattice";
    case ErrorCode::ToleranceNotReached: return "ToleranceNotReached";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::NotQGorenstein: return "NotQGorenstein";
    case ErrorCode::AmbiguousU: return "AmbiguousU";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::WrongCount: return "WrongCount";
    case ErrorCode::DegenerateSpan: return "DegenerateSpan";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_integer(std::string_view s) {
  std::string str(s);
  if (!str.empty() && str[0] == '+') str.erase(0, 1);
  return Integer(str, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  auto slash = trimmed.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(trimmed))
      throw Error(ErrorCode::ParseError, "not an exact rational: '" + std::string(text) + "'");
    return Rational(parse_integer(trimmed));
  }
  auto num = trimmed.substr(0, slash);
  auto den = trimmed.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw Error(ErrorCode::ParseError, "not an exact rational: '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(num), d);
}

Real to_real(const Integer& z) { return Real(z.get_str()); }

Real to_real(const Rational& q) {
  if (q.get_den() == 1) return to_real(q.get_num());
  return to_real(q.get_num()) / to_real(q.get_den());
}

double to_double(const Real& x) { return x.convert_to<double>(); }

Rational round_dyadic(const Real& x, unsigned bits) {
  Real scale = boost::multiprecision::ldexp(Real(1), static_cast<int>(bits));
  Real scaled = boost::multiprecision::round(x * scale);
  std::string digits = scaled.str(0, std::ios_base::fixed);
  if (auto point = digits.find('.'); point != std::string::npos) digits.resize(point);
  Integer num(digits, 10);
  Integer den = 1;
  den <<= bits;
  return make_rational(num, den);
}

RatVector zeros(std::size_t n) { return RatVector(n, Rational(0)); }

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector e = zeros(n);
  e[i] = 1;
  return e;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector operator*(const Rational& s, const RatVector& a) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

bool is_integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_integral(q); });
}

Real norm(const RatVector& v) {
  Real s = 0;
  for (const auto& q : v) {
    Real x = to_real(q);
    s += x * x;
  }
  return boost::multiprecision::sqrt(s);
}

Real distance(const RatVector& a, const RatVector& b) { return norm(a - b); }

Integer lcm_of_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

RatVector primitive_integer(const RatVector& v) {
  if (is_zero(v)) throw Error(ErrorCode::InvalidArgument, "primitive_integer of zero vector");
  Integer l = lcm_of_denominators(v);
  Integer g = 0;
  std::vector<Integer> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * l;
    ints[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(Integer(ints[i] / g));
  return r;
}

RatVector to_rat(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(static_cast<long>(v[i]));
  return r;
}

IntVector to_int(const RatVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integral(v[i]) || !v[i].get_num().fits_slong_p())
      throw Error(ErrorCode::NotLattice, "coordinate is not a machine integer: " + to_string(v[i]));
    r[i] = v[i].get_num().get_si();
  }
  return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (std::size_t j = c; j < m[row].size(); ++j) m[row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = c; j < m[r].size(); ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RatMatrix rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  return row_reduce(rows, cols).size();
}

int affine_dimension(const std::vector<RatVector>& points) {
  if (points.empty()) return -1;
  RatMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<int>(rank(std::move(diffs)));
}

Rational determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

SolveResult solve(const RatMatrix& a, const RatVector& b) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  RatMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = row_reduce(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return {SolveStatus::Inconsistent, {}};
  if (pivots.size() < cols) return {SolveStatus::Underdetermined, {}};
  RatVector x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[i] = aug[i][cols];
  return {SolveStatus::Unique, x};
}

std::vector<RatVector> nullspace(const RatMatrix& a, std::size_t cols) {
  RatMatrix m = a;
  auto pivots = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v = zeros(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix transpose(const RatMatrix& m) {
  if (m.empty()) return {};
  RatMatrix t(m[0].size(), RatVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector e = unit_vector(n, i);
    aug[i].insert(aug[i].end(), e.begin(), e.end());
  }
  auto pivots = row_reduce(aug, n);
  if (pivots.size() < n) throw Error(ErrorCode::InvalidArgument, "singular matrix");
  RatMatrix inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace toricvol
