#include <gtest/gtest.h>

#include "homlie/lie_algebra.hpp"

using namespace homlie;

TEST(Sl2, BracketsAndKilling) {
  const LieAlgebra g = sl2();
  EXPECT_EQ(g.dim(), 3u);
  // [H,E] = 2E, [H,F] = -2F, [E,F] = H
  EXPECT_EQ(g.bracket(g.unit(0), g.unit(1)), (QVector{0, 2, 0}));
  EXPECT_EQ(g.bracket(g.unit(0), g.unit(2)), (QVector{0, 0, -2}));
  EXPECT_EQ(g.bracket(g.unit(1), g.unit(2)), (QVector{1, 0, 0}));
  EXPECT_EQ(killing_form(g), (QMatrix{{8, 0, 0}, {0, 0, 4}, {0, 4, 0}}));
}

TEST(Classical, DimensionsAndNondegenerateKilling) {
  for (const auto& [s, n, dim] : {std::tuple{Series::sl, 3, 8}, std::tuple{Series::sp, 4, 10},
                                  std::tuple{Series::so, 5, 10}}) {
    const LieAlgebra g = classical(s, n);
    EXPECT_EQ(g.dim(), static_cast<std::size_t>(dim));
    EXPECT_EQ(rank(killing_form(g)), g.dim());
    EXPECT_EQ(g.cartan().size(), 2u);
  }
}

TEST(Classical, NameParsing) {
  EXPECT_TRUE(parse_classical_name("sl3"));
  EXPECT_TRUE(parse_classical_name("so5"));
  EXPECT_TRUE(parse_classical_name("sp3"));
  EXPECT_THROW(classical(Series::sp, 3), std::invalid_argument);
  EXPECT_FALSE(parse_classical_name("gl2"));
}

TEST(MakeLieAlgebra, RejectsBadTables) {
  BracketTable skew(2);
  skew(0, 1, 0) = 1;  // [e0,e1] = e0 but [e1,e0] = 0
  EXPECT_THROW(make_lie_algebra("bad", {"a", "b"}, skew), SkewViolation);

  // Skew table violating Jacobi: [x,y]=z, [y,z]=x, [z,x]=z.
  BracketTable t(3);
  t.set_skew(0, 1, QVector{0, 0, 1});
  t.set_skew(1, 2, QVector{1, 0, 0});
  t.set_skew(2, 0, QVector{0, 0, 1});
  EXPECT_THROW(make_lie_algebra("bad", {"x", "y", "z"}, t), JacobiViolation);
  EXPECT_THROW(make_lie_algebra("bad", {"x"}, BracketTable(2)), std::invalid_argument);
}

TEST(Json, RoundTrip) {
  const LieAlgebra g = sl2();
  const LieAlgebra h = parse_lie_algebra_json(to_json_text(g), "copy");
  EXPECT_EQ(h.table(), g.table());
  EXPECT_EQ(h.basis_names(), g.basis_names());
  EXPECT_THROW(parse_lie_algebra_json("{\"dim\": 2}", "x"), std::invalid_argument);
}

TEST(Jacobiator, VanishesOnSl3) {
  const LieAlgebra g = classical(Series::sl, 3);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      EXPECT_EQ(jacobiator(g.table(), i, j, (i + j) % g.dim()), QVector(g.dim(), 0));
}
