#include <gtest/gtest.h>

#include <skosbridge/conneg.hpp>

using namespace skosbridge;

namespace {

const std::vector<std::string> kOffers{"text/html", "text/turtle", "application/n-triples"};

std::optional<std::string> pick(std::optional<std::string_view> header)
{
    return negotiate(header, kOffers);
}

} // namespace

TEST(ParseAccept, RangesAndQValues)
{
    auto ranges = parse_accept("Text/HTML;level=1; q=0.5 , */*;q=0.1,application/n-triples");
    ASSERT_EQ(ranges.size(), 3u);
    EXPECT_EQ(ranges[0].type, "text");
    EXPECT_EQ(ranges[0].subtype, "html");
    EXPECT_DOUBLE_EQ(ranges[0].q, 0.5);
    EXPECT_EQ(ranges[1].specificity(), 0);
    EXPECT_DOUBLE_EQ(ranges[2].q, 1.0);
}

TEST(ParseAccept, SkipsMalformedRanges)
{
    auto ranges = parse_accept("html, /x, text/, */html, text/plain;q=2, text/plain;q=abc, text/turtle;q=0");
    ASSERT_EQ(ranges.size(), 1u);
    EXPECT_EQ(ranges[0].subtype, "turtle");
    EXPECT_DOUBLE_EQ(ranges[0].q, 0.0);
}

TEST(QualityOf, MostSpecificRangeWins)
{
    auto ranges = parse_accept("text/*;q=0.3, text/turtle;q=0.9, */*;q=0.1");
    EXPECT_DOUBLE_EQ(quality_of(ranges, "text/turtle"), 0.9);
    EXPECT_DOUBLE_EQ(quality_of(ranges, "text/html"), 0.3);
    EXPECT_DOUBLE_EQ(quality_of(ranges, "application/n-triples"), 0.1);
    EXPECT_DOUBLE_EQ(quality_of(parse_accept("text/html"), "text/turtle"), 0.0);
}

TEST(Negotiate, ExactTypes)
{
    EXPECT_EQ(pick("text/html"), "text/html");
    EXPECT_EQ(pick("text/turtle"), "text/turtle");
    EXPECT_EQ(pick("application/n-triples"), "application/n-triples");
}

TEST(Negotiate, MissingEmptyOrWildcardPrefersFirstOffer)
{
    EXPECT_EQ(pick(std::nullopt), "text/html");
    EXPECT_EQ(pick(""), "text/html");
    EXPECT_EQ(pick("*/*"), "text/html");
    EXPECT_EQ(pick("garbage"), "text/html");
}

TEST(Negotiate, HighestQWinsAndTiesGoToEarlierOffer)
{
    EXPECT_EQ(pick("text/html;q=0.2, text/turtle;q=0.8"), "text/turtle");
    EXPECT_EQ(pick("application/n-triples, text/turtle"), "text/turtle");
    EXPECT_EQ(pick("text/*;q=0.5, application/n-triples;q=0.6"), "application/n-triples");
    EXPECT_EQ(pick("*/*;q=0.1, text/html;q=0"), "text/turtle");
}

TEST(Negotiate, NothingAcceptableIsNullopt)
{
    EXPECT_FALSE(pick("image/png").has_value());
    EXPECT_FALSE(pick("text/html;q=0, text/turtle;q=0, application/n-triples;q=0").has_value());
    EXPECT_FALSE(negotiate("text/html", {}).has_value());
}

TEST(AcceptLanguage, OrdersByQAndDropsWildcardAndZero)
{
    EXPECT_EQ(parse_accept_language("de;q=0.5, EN-GB, fr;q=0.5, *;q=0.1, it;q=0"),
              (std::vector<std::string>{"en-gb", "de", "fr"}));
    EXPECT_TRUE(parse_accept_language("").empty());
}
