#include <gtest/gtest.h>

#include "homlie/deriv_spaces.hpp"

using namespace homlie;

namespace {

std::size_t der_dim(const LieAlgebra& g, long a) { return gen_derivations(g, {a, 1, 1}).dim(); }

}  // namespace

TEST(GenDerivations, Sl2Table) {
  const LieAlgebra g = sl2();
  EXPECT_EQ(der_dim(g, -1), 5u);
  EXPECT_EQ(der_dim(g, 0), 0u);
  EXPECT_EQ(der_dim(g, 1), 3u);
  EXPECT_EQ(der_dim(g, 2), 1u);
  EXPECT_EQ(der_dim(g, 3), 0u);
}

TEST(GenDerivations, BasisSatisfiesIdentity) {
  const LieAlgebra g = sl2();
  const DerivationType t{-1, 1, 1};
  for (const auto& v : gen_derivations(g, t).vectors) EXPECT_TRUE(satisfies_gen_derivation(g, t, as_square(v)));
  EXPECT_FALSE(satisfies_gen_derivation(g, t, QMatrix::identity(3)));
  EXPECT_TRUE(satisfies_gen_derivation(g, {2, 1, 1}, QMatrix::identity(3)));
}

TEST(GenDerivations, UnequalBAndC) {
  // (1,1,0): D[x,y] = [Dx,y] for all x,y. On a perfect centerless algebra this forces centroid-like maps.
  const LieAlgebra g = sl2();
  const DerivationType t{1, 1, 0};
  const auto b = gen_derivations(g, t);
  for (const auto& v : b.vectors) EXPECT_TRUE(satisfies_gen_derivation(g, t, as_square(v)));
  EXPECT_TRUE(b.contains(QMatrix::identity(3).flat()));
}

TEST(GenDerivations, ClassicalRank2) {
  for (const auto& [s, n] : {std::pair{Series::sl, 3}, std::pair{Series::sp, 4}, std::pair{Series::so, 5}}) {
    const LieAlgebra g = classical(s, n);
    EXPECT_EQ(der_dim(g, -1), 0u);
    EXPECT_EQ(der_dim(g, 0), 0u);
    EXPECT_EQ(der_dim(g, 2), 1u);
    EXPECT_EQ(der_dim(g, 1), g.dim());
  }
}

TEST(HomLieSpace, Sl2WeightsAndTraceless) {
  const LieAlgebra g = sl2();
  const auto hl = homlie_space(g);
  EXPECT_EQ(hl.dim(), 6u);
  for (const auto& v : hl.vectors) EXPECT_TRUE(satisfies_homlie_identity(g, as_square(v)));
  const auto w = ad_h_weight_decomposition(hl, g);
  std::map<int, std::size_t> mult;
  for (const auto& [k, b] : w) mult[k] = b.dim();
  EXPECT_EQ(mult, (std::map<int, std::size_t>{{-4, 1}, {-2, 1}, {0, 2}, {2, 1}, {4, 1}}));
  const auto split = traceless_split(hl);
  EXPECT_TRUE(split.has_identity);
  EXPECT_EQ(split.traceless.dim(), 5u);
  EXPECT_TRUE(split.traceless.same_span(gen_derivations(g, {-1, 1, 1})));
}

TEST(HomLieSpace, ClassicalIsScalars) {
  for (const auto& [s, n] : {std::pair{Series::sl, 3}, std::pair{Series::sp, 4}, std::pair{Series::so, 5}}) {
    const LieAlgebra g = classical(s, n);
    const auto hl = homlie_space(g);
    ASSERT_EQ(hl.dim(), 1u);
    EXPECT_TRUE(hl.contains(QMatrix::identity(g.dim()).flat()));
  }
}

TEST(TracelessSplit, RequiresIdentity) {
  const LieAlgebra g = sl2();
  EXPECT_THROW(traceless_split(gen_derivations(g, {1, 1, 1})), std::invalid_argument);
}

TEST(WeightDecomposition, RejectsNonInvariantSpace) {
  const LieAlgebra g = sl2();
  // span{E_{0,1}} is not stable under [ad H, .]: ad H-commutator maps it to a multiple of itself,
  // so use span{E_{0,1} + E_{1,0}} instead, whose image leaves the span.
  QMatrix m(3, 3);
  m(0, 1) = 1;
  m(1, 0) = 1;
  EXPECT_THROW(ad_h_weight_decomposition(span_of(9, {m.flat()}), g), NotInvariant);
}
