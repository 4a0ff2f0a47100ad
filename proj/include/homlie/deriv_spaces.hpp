#pragma once

#include <map>

#include "homlie/lie_algebra.hpp"

namespace homlie {

/// Maps D with a D([x,y]) = b [D x, y] + c [x, D y].
struct DerivationType {
  Rational a, b, c;
};

/// Weight -> eigenspace, in the ambient coordinates of the decomposed space.
using WeightDecomposition = std::map<int, SubspaceBasis>;

/// Basis of Der_(a,b,c)(g). Vectors are dim x dim matrices flattened row-major (D e_j is column j).
/// Equations run over pairs i < j when b = c (the rest follow by skew-symmetry), and over all
/// ordered pairs otherwise.
SubspaceBasis gen_derivations(const LieAlgebra& g, const DerivationType& t);

/// Basis of { T : [T e_i,[e_j,e_k]] + [T e_j,[e_k,e_i]] + [T e_k,[e_i,e_j]] = 0 for i < j < k }.
SubspaceBasis homlie_space(const LieAlgebra& g);

struct TracelessSplit {
  SubspaceBasis traceless;
  bool has_identity = false;
};

/// Intersection of an endomorphism space with the trace-zero hyperplane.
/// Throws std::invalid_argument when the identity is not in the space.
TracelessSplit traceless_split(const SubspaceBasis& space);

/// Splits an endomorphism space into eigenspaces of T -> [ad h, T] with h = e_0 (H for sl2).
/// Throws NotInvariant when the space is not stable, MathError when the restricted operator is
/// not diagonalizable with integer eigenvalues.
WeightDecomposition ad_h_weight_decomposition(const SubspaceBasis& space, const LieAlgebra& g);

/// Residual helpers used by tests and the acceptance suite.
bool satisfies_gen_derivation(const LieAlgebra& g, const DerivationType& t, const QMatrix& d);
bool satisfies_homlie_identity(const LieAlgebra& g, const QMatrix& t);

/// n x n matrix from a flattened vector of length n^2.
QMatrix as_square(const QVector& flat);

}  // namespace homlie
