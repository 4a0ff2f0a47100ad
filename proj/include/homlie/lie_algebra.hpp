#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homlie/errors.hpp"
#include "homlie/linalg.hpp"

namespace homlie {

/// Dense table of products [e_i, e_j] = sum_k c(i,j,k) e_k. No identity is assumed beyond what the
/// owner validates; Lie algebras and Hom-Lie algebras both store one.
class BracketTable {
 public:
  BracketTable() = default;
  explicit BracketTable(std::size_t dim) : dim_(dim), c_(dim * dim * dim, Rational(0)) {}

  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

  /// Sets [e_i,e_j] = v and [e_j,e_i] = -v.
  void set_skew(std::size_t i, std::size_t j, std::span<const Rational> v);

  QVector basis_bracket(std::size_t i, std::size_t j) const;
  QVector bracket(std::span<const Rational> x, std::span<const Rational> y) const;
  /// Left multiplication y -> [x, y]; column j is [x, e_j].
  QMatrix ad(std::span<const Rational> x) const;

  /// First (i,j,k) with c(i,j,k) != -c(j,i,k), scanning i, j, k lexicographically.
  std::optional<Triple> first_skew_violation() const;

  friend bool operator==(const BracketTable&, const BracketTable&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

/// Structure constants validated for skew-symmetry and the Jacobi identity.
class LieAlgebra {
 public:
  std::size_t dim() const { return table_.dim(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const BracketTable& table() const { return table_; }
  /// Indices of basis elements spanning a Cartan subalgebra, when known (classical algebras).
  const std::vector<std::size_t>& cartan() const { return cartan_; }

  QVector bracket(std::span<const Rational> x, std::span<const Rational> y) const;
  QMatrix ad(std::span<const Rational> x) const { return table_.ad(x); }
  QMatrix ad_basis(std::size_t i) const;
  QVector unit(std::size_t i) const;

 private:
  friend LieAlgebra make_lie_algebra(std::string, std::vector<std::string>, BracketTable, std::vector<std::size_t>);
  std::string name_;
  std::vector<std::string> names_;
  BracketTable table_;
  std::vector<std::size_t> cartan_;
};

/// Validates every ordered basis triple. Throws SkewViolation / JacobiViolation with the first
/// failing (i,j,k), and std::invalid_argument when the name list does not match the dimension.
LieAlgebra make_lie_algebra(std::string name, std::vector<std::string> basis_names, BracketTable constants,
                            std::vector<std::size_t> cartan = {});

/// Jacobiator components sum_cyclic [e_i,[e_j,e_k]].
QVector jacobiator(const BracketTable& t, std::size_t i, std::size_t j, std::size_t k);

/// K(i,j) = trace(ad e_i ad e_j).
QMatrix killing_form(const LieAlgebra& g);

/// sl2 with basis (H, E, F) = (E11 - E22, E12, E21).
LieAlgebra sl2();

enum class Series { sl, sp, so };

/// Matrix realizations, basis fixed as follows.
///   sl(n): H_i = E_ii - E_{i+1,i+1} (i < n-1), then E_ij for i < j, then E_ij for i > j (row-major).
///   sp(n), n = 2k: kernel of X -> X^T J + J X with J = [[0, I_k], [-I_k, 0]].
///   so(n): kernel of X -> X^T B + B X with B the split form: [[0, I_k], [I_k, 0]] for n = 2k and
///          B_00 = 1, B_{i,k+i} = B_{k+i,i} = 1 (1 <= i <= k) for n = 2k + 1.
/// For sp and so the basis is nullspace_basis of that linear system on row-major entries.
/// Cartan data lists the diagonal basis matrices. Throws std::invalid_argument for sl n < 2,
/// sp n odd or n < 4, so n < 5.
LieAlgebra classical(Series series, std::size_t n);

/// Parses "sl2", "sl3", "sp4", "so5" and similar; nullopt if the text is not of that form.
std::optional<std::pair<Series, std::size_t>> parse_classical_name(std::string_view text);

/// Structure constants of the span of linearly independent square matrices, closed under commutator.
/// Throws MathError when a commutator leaves the span.
LieAlgebra matrix_lie_algebra(std::string name, std::vector<std::string> basis_names, const std::vector<QMatrix>& basis,
                              std::vector<std::size_t> cartan = {});

/// {"dim": n, "basis": [names], "c": [[i, j, k, "p/q"], ...]} with i < j and nonzero entries only.
std::string to_json_text(const LieAlgebra& g);
/// Inverse of to_json_text; re-validates. Throws std::invalid_argument on malformed documents.
LieAlgebra parse_lie_algebra_json(std::string_view text, std::string name);

}  // namespace homlie
