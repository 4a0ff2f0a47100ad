#include <gtest/gtest.h>

#include "homlie/errors.hpp"
#include "homlie/linalg.hpp"

using namespace homlie;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/-4"), q(-3, 2));
  EXPECT_EQ(parse_rational("+7"), q(7));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
}

TEST(RowReduce, RankAndPivots) {
  const QMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const auto e = row_reduce(m);
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(rank(QMatrix(3, 4)), 0u);
}

TEST(Nullspace, FreeColumnConvention) {
  const QMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const auto n = nullspace_basis(m);
  ASSERT_EQ(n.dim(), 1u);
  EXPECT_EQ(n.vectors[0], (QVector{-1, -1, 1}));
  EXPECT_TRUE(m.apply(n.vectors[0]) == (QVector{0, 0, 0}));
}

TEST(SolveAffine, ParticularPlusKernel) {
  const QMatrix m{{1, 1}, {2, 2}};
  const QVector good{3, 6}, bad{3, 5};
  const auto s = solve_affine(m, good);
  ASSERT_TRUE(s.solvable());
  EXPECT_EQ(m.apply(*s.particular), good);
  EXPECT_EQ(s.homogeneous.dim(), 1u);
  EXPECT_FALSE(solve_affine(m, bad).solvable());
}

TEST(Subspace, SpanIntersectCoordinates) {
  const auto a = span_of(3, {{1, 0, 0}, {0, 1, 0}});
  const auto b = span_of(3, {{0, 1, 0}, {0, 0, 1}});
  const auto i = intersect(a, b);
  ASSERT_EQ(i.dim(), 1u);
  EXPECT_TRUE(i.contains(QVector{0, 5, 0}));
  EXPECT_TRUE(a.same_span(span_of(3, {{1, 1, 0}, {1, -1, 0}})));
  const auto c = a.coordinates(QVector{2, 3, 0});
  ASSERT_TRUE(c);
  EXPECT_FALSE(a.coordinates(QVector{0, 0, 1}));
}

TEST(Inverse, ExactAndSingular) {
  const QMatrix m{{2, 1}, {1, 1}};
  EXPECT_EQ(inverse(m) * m, QMatrix::identity(2));
  EXPECT_THROW(inverse(QMatrix{{1, 2}, {2, 4}}), SingularMatrix);
}

TEST(Charpoly, AscendingMonic) {
  const QMatrix m{{2, 0, 0}, {0, -1, 0}, {0, 0, -1}};
  // (x-2)(x+1)^2 = x^3 - 3x - 2
  EXPECT_EQ(charpoly(m), (std::vector<Rational>{-2, -3, 0, 1}));
  EXPECT_EQ(determinant(m), q(2));
  EXPECT_EQ(determinant(QMatrix{{1, 2}, {3, 4}}), q(-2));
}

TEST(PolyRoots, QuarticAndRational) {
  // (x-1)(x+2)(x-3)(x+1/2) expanded, ascending
  const std::vector<Rational> p{3, q(7, 2), -6, q(-3, 2), 1};
  auto rr = rational_roots(p);
  std::sort(rr.begin(), rr.end());
  EXPECT_EQ(rr, (std::vector<Rational>{-2, q(-1, 2), 1, 3}));
  std::vector<CNum> pc;
  for (const auto& c : p) pc.push_back(to_cnum(c));
  const auto roots = poly_roots(pc);
  ASSERT_EQ(roots.size(), 4u);
  for (const auto& r : roots) EXPECT_LT(std::abs(evaluate_poly<CNum>(pc, r)), 1e-9);
  const std::vector<CNum> x2p2{2.0, 0.0, 1.0};
  const auto ir = poly_roots(x2p2);
  ASSERT_EQ(ir.size(), 2u);
  EXPECT_NEAR(std::abs(ir[0].imag()), std::sqrt(2.0), 1e-12);
  EXPECT_TRUE(rational_roots(std::vector<Rational>{-2, 0, 1}).empty());
}

TEST(ApproxRank, SingularValueGap) {
  const CMatrix m{{1.0, 0.0}, {0.0, 1e-14}};
  EXPECT_EQ(rank(m), 1u);
  EXPECT_EQ(rank(CMatrix{{1.0, 2.0}, {3.0, 4.0}}), 2u);
}
