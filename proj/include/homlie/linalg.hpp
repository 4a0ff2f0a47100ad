#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "homlie/matrix.hpp"
#include "homlie/rational.hpp"

namespace homlie {

using QVector = std::vector<Rational>;

/// Linearly independent vectors spanning a subspace of Q^ambient_dim.
struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  std::vector<QVector> vectors;

  std::size_t dim() const { return vectors.size(); }
  bool empty() const { return vectors.empty(); }

  /// Vectors as the rows of a dim() x ambient_dim matrix.
  QMatrix as_rows() const;
  bool contains(std::span<const Rational> v) const;
  bool contains(const SubspaceBasis& other) const;
  bool same_span(const SubspaceBasis& other) const;
  /// Coefficients of v in this basis, if v lies in the span.
  std::optional<QVector> coordinates(std::span<const Rational> v) const;
};

/// Reduced row echelon form plus pivot columns.
struct Echelon {
  QMatrix rref;  // rank() rows, pivot entries 1
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Fraction-free (Bareiss) elimination over the integers after clearing row denominators,
/// then back-substitution to reduced form.
Echelon row_reduce(const QMatrix& m);

/// Kernel basis. One vector per free column f (ascending), with v[f] = 1 and zeros on the other
/// free columns.
SubspaceBasis nullspace_basis(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Number of singular values above eps * s_max.
std::size_t rank(const CMatrix& m, double eps = kApproxEps);
std::vector<double> singular_values(const CMatrix& m);

/// Solutions of m x = rhs: a particular solution (free variables 0) plus the kernel.
struct AffineSolution {
  std::optional<QVector> particular;
  SubspaceBasis homogeneous;
  bool solvable() const { return particular.has_value(); }
};
AffineSolution solve_affine(const QMatrix& m, std::span<const Rational> rhs);

/// Reduces a spanning list to a basis of its span (reduced echelon rows).
SubspaceBasis span_of(std::size_t ambient_dim, const std::vector<QVector>& vectors);

/// Basis of the intersection of two subspaces of the same ambient space.
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

/// Throws SingularMatrix.
QMatrix inverse(const QMatrix& m);
CMatrix inverse(const CMatrix& m);

/// Berkowitz, division-free. Returns c[0..n] ascending with c[n] = 1, i.e. det(xI - m) = sum c_k x^k.
/// Throws std::invalid_argument for a non-square matrix.
std::vector<Rational> charpoly(const QMatrix& m);

Rational determinant(const QMatrix& m);

/// Horner evaluation of an ascending coefficient list.
template <class T>
T evaluate_poly(std::span<const T> coeffs, const T& x) {
  T acc(0);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

/// All complex roots with multiplicity of a polynomial of degree 1..4 (ascending coefficients).
/// Leading coefficients below eps * max|c| are trimmed first. Roots are sorted by real part, then
/// imaginary part, and each satisfies |p(r)| <= eps * (1 + max|c|).
/// Throws MathError("no roots") for a constant polynomial and std::invalid_argument above degree 4.
std::vector<CNum> poly_roots(std::span<const CNum> coeffs, double eps = kApproxEps);

/// Rational roots (ascending, without multiplicity) of a polynomial with rational coefficients.
/// Complete when the integerized extreme coefficients are below 10^12; otherwise candidates come
/// from continued-fraction convergents of the numeric roots and may miss some.
std::vector<Rational> rational_roots(std::span<const Rational> coeffs);

}  // namespace homlie
