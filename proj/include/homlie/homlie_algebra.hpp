#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlie/lie_algebra.hpp"
#include "homlie/sl2.hpp"

namespace homlie {

/// Skew bracket table plus twist T (column j of the twist matrix is T e_j).
struct HomLieAlgebra {
  std::vector<std::string> basis_names;
  BracketTable table;
  QMatrix twist;

  std::size_t dim() const { return table.dim(); }
};

/// Checks shapes and skew-symmetry (SkewViolation); the Hom-Lie Jacobi identity is checked separately.
HomLieAlgebra make_homlie_algebra(std::vector<std::string> names, BracketTable table, QMatrix twist);

struct HomLieJacobiReport {
  bool pass = true;
  std::optional<Triple> witness;  // first failing (i,j,k) in lexicographic order
  QVector residual;               // [T e_i,[e_j,e_k]] + cyclic at the witness
};

/// Exhaustive over all ordered basis triples.
HomLieJacobiReport check_homlie_jacobi(const HomLieAlgebra& h);

/// [T x, [y, z]] + [T y, [z, x]] + [T z, [x, y]].
QVector homlie_jacobiator(const HomLieAlgebra& h, std::size_t i, std::size_t j, std::size_t k);

/// sl2[D] with basis (H, E, F, D): [x + aD, y + bD] = [x,y] + a D(y) - b D(x), twist diag(1,1,1,-1).
/// Validated exhaustively; a failure throws JacobiViolation.
HomLieAlgebra extend_sl2(const GenDer5& d);

/// Same bracket, different twist (used to show the bracket is not Lie for d != 0).
HomLieAlgebra with_twist(HomLieAlgebra h, QMatrix twist);

}  // namespace homlie
