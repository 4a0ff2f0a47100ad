#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace homlie {

/// Exact scalar. GMP keeps every value canonical: den > 0, gcd(num, den) = 1, zero is 0/1.
using Rational = mpq_class;

/// Approximate scalar, used only when an orbit reduction needs an irrational root.
using CNum = std::complex<double>;

/// Zero threshold for every CNum computation, relative to the largest magnitude involved.
inline constexpr double kApproxEps = 1e-9;

/// Parses "p/q" or "p" in base 10. Throws std::invalid_argument on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1. Sign always on the numerator.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const CNum& z) { return z == CNum{}; }

inline CNum to_cnum(const Rational& q) { return {q.get_d(), 0.0}; }

inline double magnitude(const Rational& q) { return std::abs(q.get_d()); }
inline double magnitude(const CNum& z) { return std::abs(z); }

}  // namespace homlie
