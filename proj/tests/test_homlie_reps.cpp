#include <gtest/gtest.h>

#include "homlie/acceptance.hpp"
#include "homlie/homlie_reps.hpp"

using namespace homlie;

TEST(HomLieAlgebra, ExtensionPassesIdentityTwistFails) {
  const GenDer5 d{1, 2, 3, 4, 5};
  const auto h = extend_sl2(d);
  EXPECT_EQ(h.dim(), 4u);
  EXPECT_TRUE(check_homlie_jacobi(h).pass);
  const auto bad = check_homlie_jacobi(with_twist(h, QMatrix::identity(4)));
  EXPECT_FALSE(bad.pass);
  ASSERT_TRUE(bad.witness);
  const auto& w = *bad.witness;
  EXPECT_EQ(homlie_jacobiator(with_twist(h, QMatrix::identity(4)), w[0], w[1], w[2]), bad.residual);
  EXPECT_TRUE(check_homlie_jacobi(with_twist(extend_sl2(GenDer5{}), QMatrix::identity(4))).pass);
}

TEST(Sl2Module, IrreducibleRelations) {
  for (int m = 0; m <= 6; ++m) {
    const auto v = Sl2Module::irreducible(m);
    EXPECT_EQ(v.dim(), static_cast<std::size_t>(m + 1));
    EXPECT_EQ(commutator(v.rho(0), v.rho(1)), v.rho(1) * Rational(2));
    EXPECT_EQ(commutator(v.rho(0), v.rho(2)), v.rho(2) * Rational(-2));
    EXPECT_EQ(commutator(v.rho(1), v.rho(2)), v.rho(0));
  }
  EXPECT_THROW(Sl2Module::irreducible(-1), std::invalid_argument);
}

TEST(RepExtension, V2MatchesClosedForm) {
  RationalSampler rs(21);
  const auto spec = RepSpec::with_identity(Sl2Module::irreducible(2));
  for (int i = 0; i < 20; ++i) {
    const GenDer5 d = rs.tuple();
    const auto s = solve_rep_extension(spec, d);
    ASSERT_TRUE(s.solvable);
    EXPECT_TRUE(s.homogeneous.empty());
    EXPECT_EQ(*s.particular, rho_D_closed_form(d));
  }
}

TEST(RepExtension, OtherWeightsUnsolvable) {
  const GenDer5 d{1, 1, 1, 1, 1};
  for (int m : {1, 3, 4, 5, 6, 7, 8})
    EXPECT_FALSE(solve_rep_extension(RepSpec::with_identity(Sl2Module::irreducible(m)), d).solvable) << m;
  // V(0) carries no constraint.
  const auto triv = solve_rep_extension(RepSpec::with_identity(Sl2Module::irreducible(0)), d);
  EXPECT_TRUE(triv.solvable);
  EXPECT_EQ(triv.homogeneous.size(), 1u);
}

TEST(RepExtension, NonIdentityLUnsupported) {
  RepSpec spec = RepSpec::with_identity(Sl2Module::irreducible(2));
  spec.L = QMatrix::identity(3) * Rational(2);
  EXPECT_THROW(solve_rep_extension(spec, GenDer5{}), Unsupported);
}

TEST(AntiIntertwiners, OnlyTrivialPair) {
  EXPECT_EQ(anti_intertwiners(0, 0).dim(), 1u);
  for (int m = 0; m <= 4; ++m)
    for (int m2 = 0; m2 <= 4; ++m2)
      if (m + m2 > 0) EXPECT_TRUE(anti_intertwiners(m, m2).empty()) << m << "," << m2;
}

TEST(DoubleExtension, Dimensions7And10) {
  const GenDer5 d{1, 1, 1, 1, 1};
  const auto v2 = RepSpec::with_identity(Sl2Module::irreducible(2));
  const auto h7 = double_extension(d, v2, rho_D_closed_form(d));
  EXPECT_EQ(h7.dim(), 7u);
  EXPECT_TRUE(check_homlie_jacobi(h7).pass);
  const auto v22 = RepSpec::with_identity(Sl2Module::direct_sum({2, 2}));
  const auto s = solve_rep_extension(v22, d);
  ASSERT_TRUE(s.solvable);
  const auto h10 = double_extension(d, v22, *s.particular);
  EXPECT_EQ(h10.dim(), 10u);
  EXPECT_TRUE(check_homlie_jacobi(h10).pass);
  EXPECT_THROW(double_extension(d, v2, QMatrix::identity(3)), RepresentationViolation);
}

TEST(InvariantComplement, DiagonalSubmodule) {
  const GenDer5 d{0, 1, 2, 3, 0};
  const auto spec = RepSpec::with_identity(Sl2Module::direct_sum({2, 2}));
  const auto s = solve_rep_extension(spec, d);
  ASSERT_TRUE(s.solvable);
  std::vector<QVector> diag;
  for (std::size_t i = 0; i < 3; ++i) {
    QVector e(6, 0);
    e[i] = 1;
    e[3 + i] = 1;
    diag.push_back(e);
  }
  const auto u = span_of(6, diag);
  const auto w = find_invariant_complement(spec, *s.particular, u);
  EXPECT_EQ(w.dim(), 3u);
  EXPECT_TRUE(intersect(u, w).empty());
  EXPECT_TRUE(is_invariant(w, {spec.module.rho(0), spec.module.rho(1), spec.module.rho(2), *s.particular}));

  QVector e0(6, 0);
  e0[0] = 1;
  EXPECT_THROW(find_invariant_complement(spec, *s.particular, span_of(6, {e0})), NotInvariant);
}
