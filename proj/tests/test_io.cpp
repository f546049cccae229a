#include <gtest/gtest.h>

#include "pvs/io.hpp"
#include "pvs/representatives.hpp"

using namespace pvs;

namespace {

std::string error_of(const std::string& text) {
  try {
    form_from_json(Json::parse(text));
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, ParsesCase1W) {
  const auto f = form_from_json(
      Json::parse(R"({"dim":6,"degree":3,"scalar":"rational","coeffs":{"1,2,3":"1","4,5,6":"1"}})"));
  ASSERT_TRUE(std::holds_alternative<AlternatingForm<Rational>>(f));
  EXPECT_EQ(std::get<AlternatingForm<Rational>>(f), make_rep({RepKind::case1_w}));
}

TEST(Io, DistinctErrors) {
  EXPECT_EQ(error_of(R"({"dim":6,"degree":3,"coeffs":{"2,1,3":"1"}})"), "indices not strictly increasing");
  EXPECT_EQ(error_of(R"({"dim":6,"degree":3,"coeffs":{"1,2,3":"1/0"}})"), "zero denominator");
  EXPECT_NE(error_of(R"({"dim":6,"degree":3,"coeffs":{"1,2":"1"}})").find("expected 3"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim":6,"degree":3,"coeffs":{"1,2,7":"1"}})").find("out of range"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim":6,"degree":3,"coeffs":{"1,2,3":"x"}})").find("malformed rational"), std::string::npos);
  EXPECT_NE(error_of(R"({"degree":3,"coeffs":{}})").find("dim"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim":6,"degree":3,"scalar":"float","coeffs":{"1,2,3":"1"}})").find("JSON numbers"),
            std::string::npos);
}

TEST(Io, RoundTripRepresentatives) {
  const std::vector<RepName> names{{RepKind::case1_w},      {RepKind::case1_w1},     {RepKind::case1_walpha, 2},
                                   {RepKind::case1_walpha, -1}, {RepKind::case2_w}, {RepKind::case2_wprime},
                                   {RepKind::case2_w1},     {RepKind::case3_w, 2},   {RepKind::case3_w, 3}};
  for (const auto& n : names) {
    const auto x = make_rep(n);
    const Json j = to_json(x);
    EXPECT_EQ(std::get<AlternatingForm<Rational>>(form_from_json(j)), x) << to_string(n);
    EXPECT_EQ(to_json(std::get<AlternatingForm<Rational>>(form_from_json(Json::parse(j.dump())))).dump(), j.dump());
  }
}

TEST(Io, RationalsAreReduced) {
  const auto f = std::get<AlternatingForm<Rational>>(
      form_from_json(Json::parse(R"({"dim":4,"degree":2,"coeffs":{"1,3":"2/4","2,4":"-6/3","1,2":"0"}})")));
  EXPECT_EQ(to_json(f).dump(), R"({"coeffs":{"1,3":"1/2","2,4":"-2"},"degree":2,"dim":4,"scalar":"rational"})");
}

TEST(Io, QuadExtAndFloat) {
  const auto q = std::get<AlternatingForm<QuadExt>>(form_from_json(Json::parse(
      R"({"dim":6,"degree":3,"scalar":"quadext","d":2,"coeffs":{"1,2,3":"1","1,5,6":{"a":"0","b":"1"}}})")));
  EXPECT_EQ(q.coeff(make_blade({1, 5, 6}, 6)), QuadExt::root(2));
  EXPECT_EQ(std::get<AlternatingForm<QuadExt>>(form_from_json(to_json(q))), q);
  EXPECT_EQ(to_json(q)["d"], 2);

  const auto x = form_cast<double>(make_rep({RepKind::case2_w})) * 0.25;
  EXPECT_EQ(std::get<AlternatingForm<double>>(form_from_json(to_json(x))), x);
}

TEST(Io, Targets) {
  Json j = Json::parse(R"({"values":{"1,2":0.5,"1,3":"1/4","2,3":0}})");
  const auto y = target_from_json(j, FormCase::case3, 2);
  EXPECT_EQ(y.values.at(make_blade({1, 3}, 4)), 0.25);
  EXPECT_EQ(target_from_json(to_json(y), FormCase::case3, 2).values, y.values);
  j["values"].erase("2,3");
  EXPECT_THROW(target_from_json(j, FormCase::case3, 2), ParseError);
  EXPECT_THROW(target_from_json(Json::parse(R"({"dim":7,"values":{}})"), FormCase::case1, 0), ParseError);
}
