#pragma once

// Exact scalar and vector arithmetic shared by every geometry routine.
// Rationals are GMP mpq values (always canonical); reals are 50-digit
// binary floats used only for reporting and for optimizer directions.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gmpxx.h>

namespace toricvol {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;
using Real = boost::multiprecision::cpp_bin_float_50;
using IntVector = std::vector<long long>;
using IntMatrix = std::vector<IntVector>;

Rational make_rational(const Integer& num, const Integer& den);
inline Rational rat(long long x) { return Rational(static_cast<long>(x)); }
inline Rational frac(long long num, long long den) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

/// "p/q" or "p" (lowest terms). Inverse of parse_rational.
std::string to_string(const Rational& q);
std::string to_string(const RatVector& v);

/// Accepts "p", "-p", "p/q". Anything with a decimal point or exponent is
/// rejected with ParseError.
Rational parse_rational(std::string_view text);

Real to_real(const Rational& q);
Real to_real(const Integer& z);
double to_double(const Real& x);

/// Nearest dyadic rational with denominator 2^bits.
Rational round_dyadic(const Real& x, unsigned bits = 64);

RatVector zeros(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& a);
Rational dot(const RatVector& a, const RatVector& b);
bool is_zero(const RatVector& v);
bool is_integral(const Rational& q);
bool is_integral(const RatVector& v);
Real norm(const RatVector& v);
Real distance(const RatVector& a, const RatVector& b);

/// Positive multiple of v that is a primitive integer vector. v must be nonzero.
RatVector primitive_integer(const RatVector& v);

Integer lcm_of_denominators(const RatVector& v);

RatVector to_rat(const IntVector& v);
IntVector to_int(const RatVector& v);

// ---- dense exact linear algebra -------------------------------------------

std::size_t rank(RatMatrix rows);

/// Affine dimension of a point set (-1 for the empty set).
int affine_dimension(const std::vector<RatVector>& points);

Rational determinant(RatMatrix m);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
  SolveStatus status;
  RatVector x;  // valid only when status == Unique
};

/// Solves A x = b for x.
SolveResult solve(const RatMatrix& a, const RatVector& b);

/// Basis of { x : A x = 0 } over the rationals; `cols` is the number of unknowns.
std::vector<RatVector> nullspace(const RatMatrix& a, std::size_t cols);

RatMatrix transpose(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);

}  // namespace toricvol
