#include <gtest/gtest.h>

#include "homlie/acceptance.hpp"
#include "homlie/sl2.hpp"

using namespace homlie;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Tuple, MatrixRoundTrip) {
  const GenDer5 d{1, 2, 3, 4, 5};
  EXPECT_EQ(tuple_to_matrix(d), (QMatrix{{2, 2, 3}, {6, -1, 4}, {4, 5, -1}}));
  EXPECT_EQ(matrix_to_tuple(tuple_to_matrix(d)), d);
  EXPECT_THROW(matrix_to_tuple(QMatrix::identity(3)), NotAGenDer);
}

TEST(Automorphisms, PreserveBracketAndInvert) {
  RationalSampler rs(11);
  for (int i = 0; i < 20; ++i) {
    const Rational a = rs.next_nonzero(), c = rs.next_nonzero();
    for (const auto& e : {AutElement::g(a), AutElement::h(a), AutElement::f(a, c), AutElement::diag(c)}) {
      const QMatrix m = aut_matrix(e);
      EXPECT_TRUE(preserves_sl2_bracket(m));
      EXPECT_EQ(aut_matrix(e.inverse()) * m, QMatrix::identity(3)) << e.describe();
    }
  }
  EXPECT_THROW(aut_matrix(AutElement::diag(0)), std::invalid_argument);
  EXPECT_THROW(aut_matrix(AutElement::f(1, 0)), std::invalid_argument);
}

TEST(Actions, ClosedFormsMatchConjugation) {
  RationalSampler rs(12);
  for (int i = 0; i < 100; ++i) {
    const Rational a = rs.next_nonzero(), c = rs.next_nonzero();
    const GenDer5 d = rs.tuple();
    EXPECT_EQ(act_closed(ClosedAction<Rational>{ClosedKind::K, a, 1}, d), act_conj(AutElement::g(a), d));
    EXPECT_EQ(act_closed(ClosedAction<Rational>{ClosedKind::L, a, 1}, d), act_conj(AutElement::h(a), d));
    EXPECT_EQ(act_closed(ClosedAction<Rational>{ClosedKind::J, a, c}, d), act_conj(AutElement::f(a, c), d));
  }
  EXPECT_EQ(act_closed(ClosedAction<Rational>{ClosedKind::K, 1, 1}, GenDer5{0, 0, 0, 0, 1}), (GenDer5{1, 1, -1, 1, 1}));
}

TEST(Actions, JWorkedExamplesCorrected) {
  // Conjugation by f_{1,c}: the values below are the corrected ones.
  const Rational c = q(3, 2), z = q(-2, 5), m = q(7);
  EXPECT_EQ(act_conj(AutElement::f(1, c), GenDer5{z, 0, 0, 0, 0}), (GenDer5{z, 0, 6 * c * z, 24 * c * c * z, 0}));
  EXPECT_EQ(act_conj(AutElement::f(1, c), GenDer5{0, 0, 0, 0, m}), (GenDer5{0, 0, 0, c * c * c * c * m, 0}));
  EXPECT_EQ(act_conj(AutElement::f(1, c), GenDer5{0, m, 0, 0, 0}), (GenDer5{0, 0, c * c * m, 8 * c * c * c * m, 0}));
  // The tabulated J^1..J^3 reproduce the uncorrected first example.
  EXPECT_EQ(tabulated_j_action(1, c, GenDer5{z, 0, 0, 0, 0}), (GenDer5{-z, 0, -18 * c * z, 24 * c * c * z, 0}));
}

TEST(Classify, Families) {
  using F = ClassLabel::Family;
  EXPECT_EQ(classify(GenDer5{0, 0, 0, 1, 0}).family, F::RANK1);
  EXPECT_EQ(classify(GenDer5{0, 0, 0, 0, 1}).family, F::RANK1);
  EXPECT_EQ(classify(GenDer5{0, 1, 0, 0, 0}).family, F::RANK2_A);
  const auto b = classify(GenDer5{0, 1, 3, 0, 0});
  EXPECT_EQ(b.family, F::RANK2_B);
  EXPECT_EQ(*b.sigma, q(3));
  const auto r3 = classify(GenDer5{0, 1, 3, 8, 0});
  EXPECT_EQ(r3.family, F::RANK3_B);
  EXPECT_EQ(*r3.sigma, q(3));
  EXPECT_EQ(*r3.lambda, q(8));
  EXPECT_EQ(classify(GenDer5{0, 1, 0, 2, 0}).family, F::RANK3_A);
  EXPECT_EQ(classify(GenDer5{1, 0, 0, 0, 0}).family, F::RANK3_DIAG);
  EXPECT_THROW(classify(GenDer5{}), ZeroDerivation);
}

TEST(Classify, InvariantUnderGroupAction) {
  RationalSampler rs(13);
  for (int i = 0; i < 50; ++i) {
    const GenDer5 d = rs.nonzero_tuple();
    const Rational a = rs.next_nonzero(), c = rs.next_nonzero();
    const GenDer5 d2 = act_conj(AutElement::f(a, c), act_conj(AutElement::g(a), d));
    EXPECT_EQ(orbit_equivalent(d, d2), Verdict::equivalent);
  }
  EXPECT_EQ(orbit_equivalent(GenDer5{0, 1, 1, 1, 0}, GenDer5{0, 1, 4, 8, 0}), Verdict::equivalent);  // xi = 2
  EXPECT_EQ(orbit_equivalent(GenDer5{0, 1, 1, 1, 0}, GenDer5{0, 1, 1, 2, 0}), Verdict::distinct);
  EXPECT_EQ(orbit_equivalent(GenDer5{0, 1, 0, 0, 0}, GenDer5{0, 1, 1, 0, 0}), Verdict::distinct);
}

TEST(CanonicalForm, ExactExamples) {
  const auto r1 = canonical_form(GenDer5{0, 0, 0, 0, 1});
  EXPECT_FALSE(r1.approximate());
  EXPECT_EQ(r1.label.family, ClassLabel::Family::RANK1);
  const auto r3 = canonical_form(GenDer5{0, 1, 3, 8, 0});
  EXPECT_EQ(r3.label.name(), classify(GenDer5{0, 1, 3, 8, 0}).name());
  EXPECT_THROW(canonical_form(GenDer5{1, 0, 0, 0, 0}), NoCanonicalForm);
  EXPECT_THROW(canonical_form(GenDer5{}), ZeroDerivation);
}

TEST(CanonicalForm, RandomTuplesReachZetaMuZero) {
  RationalSampler rs(14);
  for (int i = 0; i < 60; ++i) {
    const GenDer5 d = rs.nonzero_tuple();
    const auto r = canonical_form(d);
    if (const auto* e = std::get_if<Reduction<Rational>>(&r.reduction)) {
      EXPECT_EQ(e->canonical.zeta, 0);
      EXPECT_EQ(e->canonical.mu, 0);
      EXPECT_EQ(replay(d, *e), e->canonical);
      EXPECT_EQ(orbit_equivalent(d, e->canonical), Verdict::equivalent);
    } else {
      const auto& a = std::get<Reduction<CNum>>(r.reduction);
      EXPECT_EQ(a.canonical.zeta, CNum{});
      EXPECT_EQ(a.canonical.mu, CNum{});
      EXPECT_EQ(rank(tuple_to_matrix(a.canonical)), rank(tuple_to_matrix(d)));
      const auto replayed = replay(to_cnum(d), a);
      EXPECT_LT(max_magnitude(tuple_to_matrix(replayed) - tuple_to_matrix(a.canonical)),
                1e-6 * std::max(1.0, max_magnitude(a.canonical)));
    }
  }
}
