#include <bitour/io.hpp>
#include <bitour/report_json.hpp>

#include <gtest/gtest.h>

namespace bitour {
namespace {

TEST(ParseList, AcceptsWhitespaceAndEmpty) {
  EXPECT_EQ(parse_list("1,2,3"), (IntSeq{1, 2, 3}));
  EXPECT_EQ(parse_list("  1 ,2,  3 "), (IntSeq{1, 2, 3}));
  EXPECT_EQ(parse_list(""), IntSeq{});
  EXPECT_EQ(parse_list("   "), IntSeq{});
  EXPECT_EQ(parse_list("9223372036854775807"), (IntSeq{9223372036854775807}));
}

TEST(ParseList, ErrorsCarryColumns) {
  auto column_of = [](std::string_view text) -> std::size_t {
    try {
      parse_list(text);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  EXPECT_EQ(column_of("1,-2"), 3U);
  EXPECT_EQ(column_of("1, 2.5"), 4U);
  EXPECT_EQ(column_of("1,,2"), 3U);
  EXPECT_EQ(column_of("1,2,"), 5U);
  EXPECT_EQ(column_of("1 2"), 3U);
  EXPECT_EQ(column_of("x"), 1U);
  EXPECT_EQ(column_of("99999999999999999999"), 1U);
}

TEST(ParsePair, SplitsOnBar) {
  const auto p = parse_pair("1,1,2,2,3,4 | 1,2,3,5,6");
  EXPECT_EQ(p.a, (IntSeq{1, 1, 2, 2, 3, 4}));
  EXPECT_EQ(p.b, (IntSeq{1, 2, 3, 5, 6}));
  const auto empty = parse_pair("|");
  EXPECT_TRUE(empty.a.empty());
  EXPECT_TRUE(empty.b.empty());
}

TEST(ParsePair, ErrorsRefersToWholeInput) {
  try {
    parse_pair("1,2 | 3,-4");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 9U);
  }
  EXPECT_THROW(parse_pair("1,2"), ParseError);
  EXPECT_THROW(parse_pair("1|2|3"), ParseError);
}

TEST(Render, TraceKeepsZeroPositions) {
  const auto out = trim_by_sequence(BoundedSeq({2, 1, 0}, 2), IntSeq{1, 2});
  EXPECT_EQ(render_trace(out.trace, "Bbar"),
            "Bbar = <2,1,0>\n"
            "Bbar_<1> = <1,1,0>\n"
            "Bbar_<1,2> = <0,0,0>\n");
}

TEST(Render, Summaries) {
  EXPECT_EQ(summary(moon_check({0}, {0})), "moon: reject (k,l)=(1,1): sum 0 < 1");
  EXPECT_EQ(summary(trim_check({1}, {0})), "trimming: accept");
  EXPECT_EQ(summary(trim_check({2, 0}, {0, 2})), "trimming: reject step 1: NotEnoughPositives(2,1)");
  EXPECT_EQ(summary(landau_check({0, 0, 2})), "landau: reject k=2: prefix sum 0 < 1");
}

TEST(Json, ReportShape) {
  const auto j = to_json(trim_check({1, 3, 4, 5}, {0, 1, 2, 2, 2}));
  EXPECT_EQ(j["criterion"], "trimming");
  EXPECT_EQ(j["verdict"], "accept");
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["trace"]["initial"], nlohmann::json({4, 3, 2, 2, 2}));
  EXPECT_EQ(j["trace"]["steps"].size(), 4U);
  EXPECT_EQ(j["trace"]["steps"][1]["amount"], 3);
  EXPECT_EQ(j["trace"]["steps"][1]["result"], nlohmann::json({2, 2, 1, 2, 2}));

  const auto r = to_json(moon_check({0}, {0}));
  EXPECT_EQ(r["witness"]["kind"], "inequality");
  EXPECT_EQ(r["witness"]["k"], 1);
  EXPECT_EQ(r["witness"]["l"], 1);
}

}  // namespace
}  // namespace bitour
