#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "homlie/errors.hpp"
#include "homlie/linalg.hpp"

namespace homlie {

/// D = zeta P + eta Q + sigma R + lambda S + mu T, i.e. the matrix
/// [[2 zeta, eta, sigma], [2 sigma, -zeta, lambda], [2 eta, mu, -zeta]] in the basis (H, E, F).
template <class S>
struct GenDer5Of {
  S zeta{0}, eta{0}, sigma{0}, lambda{0}, mu{0};

  std::array<S, 5> components() const { return {zeta, eta, sigma, lambda, mu}; }
  static GenDer5Of from(std::span<const S> v) {
    if (v.size() != 5) throw std::invalid_argument("GenDer5: need exactly 5 components");
    return {v[0], v[1], v[2], v[3], v[4]};
  }
  bool is_zero() const { return zeta == S(0) && eta == S(0) && sigma == S(0) && lambda == S(0) && mu == S(0); }
  friend bool operator==(const GenDer5Of&, const GenDer5Of&) = default;
};

using GenDer5 = GenDer5Of<Rational>;
using CGenDer5 = GenDer5Of<CNum>;

CGenDer5 to_cnum(const GenDer5& d);
double max_magnitude(const CGenDer5& d);

template <class S>
Matrix<S> tuple_to_matrix(const GenDer5Of<S>& d);

/// Throws NotAGenDer when m is not in span{P,Q,R,S,T}.
GenDer5 matrix_to_tuple(const QMatrix& m);
/// Membership tested within eps relative to the largest entry.
CGenDer5 matrix_to_tuple(const CMatrix& m, double eps = kApproxEps);

/// [x, y] in sl2 coordinates (H, E, F).
template <class S>
std::array<S, 3> sl2_bracket(std::span<const S> x, std::span<const S> y);

/// True when a[x,y] = [ax, ay] on all basis pairs (exactly, or within eps for CNum).
bool preserves_sl2_bracket(const QMatrix& a);
bool preserves_sl2_bracket(const CMatrix& a, double eps = kApproxEps);

enum class AutKind { G, H, F, Diag };

/// Generators of Aut(sl2), with matrices (columns are images of H, E, F)
///   g_a      = [[1,0,a],[-2a,1,-a^2],[0,0,1]]
///   h_a      = [[1,-a,0],[0,1,0],[2a,-a^2,1]]
///   f_{a,c}  = [[1-2a^2, (a+a^2)/c, ac-a^2c], [-2ac-2a^2c, (1+a)^2, -a^2c^2], [(2a^2-2a)/c, -a^2/c^2, (1-a)^2]]
///   Diag(nu) = diag(1, nu, 1/nu)
template <class S>
struct AutElementOf {
  AutKind kind = AutKind::G;
  S a{0};
  S c{1};

  static AutElementOf g(S a) { return {AutKind::G, a, S(1)}; }
  static AutElementOf h(S a) { return {AutKind::H, a, S(1)}; }
  static AutElementOf f(S a, S c) { return {AutKind::F, a, c}; }
  static AutElementOf diag(S nu) { return {AutKind::Diag, nu, S(1)}; }

  /// g_{-a}, h_{-a}, f_{-a,c}, Diag(1/nu).
  AutElementOf inverse() const;
  std::string describe() const;
  friend bool operator==(const AutElementOf&, const AutElementOf&) = default;
};

using AutElement = AutElementOf<Rational>;
using CAutElement = AutElementOf<CNum>;

/// Throws std::invalid_argument for a zero parameter of F or Diag.
template <class S>
Matrix<S> aut_matrix(const AutElementOf<S>& e);

/// D -> scale * g D g^{-1} with g = auts.back() * ... * auts.front() (first element acts first).
template <class S>
struct GroupElementOf {
  S scale{1};
  std::vector<AutElementOf<S>> auts;
};

using GroupElement = GroupElementOf<Rational>;

template <class S>
Matrix<S> aut_matrix(const GroupElementOf<S>& g);

/// matrix_to_tuple(A D A^{-1}).
template <class S>
GenDer5Of<S> act_conj(const AutElementOf<S>& e, const GenDer5Of<S>& d);
template <class S>
GenDer5Of<S> act_conj(const GroupElementOf<S>& g, const GenDer5Of<S>& d);

enum class ClosedKind { K, L, J };

/// Closed-form polynomial actions: K(a) ~ conjugation by g_a, L(a) ~ h_a, J(a,c) ~ f_{a,c}.
template <class S>
struct ClosedAction {
  ClosedKind kind = ClosedKind::K;
  S a{1};
  S c{1};
};

/// Throws std::invalid_argument when a = 0, or c = 0 for J.
template <class S>
GenDer5Of<S> act_closed(const ClosedAction<S>& act, const GenDer5Of<S>& d);

// ---- classification --------------------------------------------------------------------------

/// The orbit families of nonzero D under D -> xi g D g^{-1}. Parameters are normalized so that
/// eta = 1 in the canonical form (0, eta, sigma, lambda, 0).
/// RANK3_DIAG is the orbit of P = diag(2,-1,-1): rank 3 with a repeated eigenvalue and
/// diagonalizable. It has no representative with zeta = mu = 0.
struct ClassLabel {
  enum class Family { RANK1, RANK2_A, RANK2_B, RANK3_A, RANK3_B, RANK3_DIAG };
  Family family = Family::RANK1;
  std::optional<Rational> sigma;
  std::optional<Rational> lambda;

  std::string name() const;
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

std::string to_string(ClassLabel::Family f);

struct Invariants {
  std::size_t rank = 0;
  std::vector<Rational> charpoly;  // ascending, monic, degree 3
};

Invariants invariants(const GenDer5& d);

/// Exact, from rank, characteristic polynomial and (on the repeated-eigenvalue locus) the
/// minimal polynomial. Throws ZeroDerivation for d = 0.
ClassLabel classify(const GenDer5& d);

/// Reads the label off a canonical tuple (0, eta, sigma, lambda, 0).
/// Throws std::invalid_argument when zeta or mu is nonzero, ZeroDerivation for 0.
ClassLabel classify_canonical(const GenDer5& d);

enum class Verdict { equivalent, distinct, inconclusive };
std::string to_string(Verdict v);

/// Throws ZeroDerivation when either input is zero.
Verdict orbit_equivalent(const GenDer5& d1, const GenDer5& d2);
/// Numerical version. Returns inconclusive whenever a decision rests on a quantity that is zero
/// only within eps.
Verdict orbit_equivalent(const CGenDer5& d1, const CGenDer5& d2, double eps = kApproxEps);

// ---- canonical form --------------------------------------------------------------------------

class NoCanonicalForm : public MathError {
 public:
  NoCanonicalForm() : MathError("NoCanonicalForm: the orbit of diag(2,-1,-1) has no representative with zeta = mu = 0") {}
};

template <class S>
struct ReductionStep {
  AutElementOf<S> element;
  GenDer5Of<S> before;
  GenDer5Of<S> after;  // after conjugation and, in approximate mode, forcing the killed slot to 0
  std::string rule;
};

template <class S>
struct Reduction {
  std::vector<ReductionStep<S>> steps;
  GenDer5Of<S> canonical;
};

struct CanonicalFormResult {
  GenDer5 input;
  std::variant<Reduction<Rational>, Reduction<CNum>> reduction;
  ClassLabel label;

  bool approximate() const { return reduction.index() == 1; }
  /// Canonical tuple as CNum (exact values converted when not approximate).
  CGenDer5 canonical_cnum() const;
};

/// Staged reduction to (0, eta, sigma, lambda, 0): first mu, then zeta. Uses rational steps when
/// every needed root is rational; otherwise restarts over CNum and the result is approximate.
/// Throws ZeroDerivation for d = 0 and NoCanonicalForm for the RANK3_DIAG orbit.
CanonicalFormResult canonical_form(const GenDer5& d);

/// Re-applies every step by conjugation, without the forced zeros.
template <class S>
GenDer5Of<S> replay(const GenDer5Of<S>& input, const Reduction<S>& r);

}  // namespace homlie
