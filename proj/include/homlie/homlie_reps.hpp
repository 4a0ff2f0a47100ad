#pragma once

#include <array>
#include <optional>
#include <vector>

#include "homlie/homlie_algebra.hpp"

namespace homlie {

/// Direct sum V(m_1) + ... + V(m_r) of irreducible sl2-modules in the weight basis
/// v_0..v_m of each summand:
///   H v_k = (m - 2k) v_k,  E v_k = (m - k + 1) v_{k-1},  F v_k = (k + 1) v_{k+1}.
class Sl2Module {
 public:
  /// Throws std::invalid_argument for a negative weight.
  static Sl2Module irreducible(int m);
  static Sl2Module direct_sum(const std::vector<int>& weights);

  std::size_t dim() const { return dim_; }
  const std::vector<int>& weights() const { return weights_; }
  /// Start of each summand in the coordinate vector.
  const std::vector<std::size_t>& offsets() const { return offsets_; }
  /// Action of H (0), E (1), F (2).
  const QMatrix& rho(std::size_t x) const { return rho_.at(x); }
  /// Action of a general element x = h H + e E + f F.
  QMatrix rho_of(std::span<const Rational> x) const;

 private:
  std::vector<int> weights_;
  std::vector<std::size_t> offsets_;
  std::size_t dim_ = 0;
  std::array<QMatrix, 3> rho_;
};

/// Module plus the auxiliary map L of a Hom-Lie representation.
struct RepSpec {
  Sl2Module module;
  QMatrix L;

  static RepSpec with_identity(Sl2Module m);
};

/// Affine solution set for A = rho(D).
struct RepSolution {
  bool solvable = false;
  std::optional<QMatrix> particular;
  std::vector<QMatrix> homogeneous;
};

/// Solves A rho(x) + rho(x) A = -rho(D(x)) for x in {H, E, F}. Throws Unsupported when L != Id.
RepSolution solve_rep_extension(const RepSpec& spec, const GenDer5& d);

/// [[-zeta, -2 sigma, -lambda], [-eta, 2 zeta, sigma], [-mu, 2 eta, -zeta]].
QMatrix rho_D_closed_form(const GenDer5& d);

/// Basis of (m2+1) x (m+1) matrices T with rho_m2(x) T = -T rho_m(x); vectors flattened row-major.
/// Throws std::invalid_argument for negative weights.
SubspaceBasis anti_intertwiners(int m, int m2);

/// g + V with [x + u, y + v] = [x,y] + rho(x) v - rho(y) u and twist T + L, after checking
///   rho([x,y]) L = rho(T x) rho(y) - rho(T y) rho(x)
/// on all basis pairs of h and on one fixed non-basis pair (RepresentationViolation otherwise).
/// rho holds one matrix per basis element of h.
HomLieAlgebra double_extension(const HomLieAlgebra& h, const RepSpec& spec, const std::vector<QMatrix>& rho);

/// Convenience form for h = sl2[d], with rho(H), rho(E), rho(F) from the module.
HomLieAlgebra double_extension(const GenDer5& d, const RepSpec& spec, const QMatrix& rho_D);

/// A complement of `submodule` invariant under rho(H), rho(E), rho(F) and rho_D. Built from
/// highest-weight vectors (kernel of rho(E) in each weight space) and their F-strings, then checked.
/// Throws NotInvariant when the submodule is not invariant; std::logic_error if the sl2-complement
/// is not rho_D-invariant.
SubspaceBasis find_invariant_complement(const RepSpec& spec, const QMatrix& rho_D, const SubspaceBasis& submodule);

/// True when every operator maps the span of `space` into itself.
bool is_invariant(const SubspaceBasis& space, const std::vector<QMatrix>& operators);

}  // namespace homlie
