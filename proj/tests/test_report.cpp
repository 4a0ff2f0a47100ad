#include <gtest/gtest.h>

#include "homlie/report.hpp"

using namespace homlie;

TEST(Report, RationalsAreStrings) {
  Rational q(-6, 4);
  q.canonicalize();
  EXPECT_EQ(to_json(q), Json("-3/2"));
  EXPECT_EQ(to_json(GenDer5{0, 1, 0, 0, 0}).dump(), R"(["0","1","0","0","0"])");
  EXPECT_EQ(to_json(CNum{1.5, -2.0}).dump(), "[1.5,-2.0]");
}

TEST(Report, Shape) {
  const Json r = make_report("classify", Json{{"d", to_json(GenDer5{0, 0, 0, 1, 0})}},
                             to_json(classify(GenDer5{0, 0, 0, 1, 0})), false);
  EXPECT_EQ(r["mode"], "exact");
  EXPECT_EQ(r["results"]["label"], "RANK1");
  EXPECT_FALSE(r.contains("seed"));
  EXPECT_EQ(make_report("verify", Json::object(), nullptr, false, 7)["seed"], 7);
}

TEST(Report, CanonicalTraceRecordsSteps) {
  const Json j = to_json(canonical_form(GenDer5{0, 0, 0, 0, 1}));
  EXPECT_FALSE(j["approximate"].get<bool>());
  ASSERT_FALSE(j["trace"].empty());
  EXPECT_EQ(j["trace"].back()["after"], j["canonical"]);
}
