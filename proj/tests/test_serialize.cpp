#include "dyckres/serialize.hpp"

#include <gtest/gtest.h>

using namespace dyckres;

TEST(Json, IntegersSwitchToStringsPast64Bits)
{
    EXPECT_EQ(integer_to_json(Integer(225)).dump(), "225");
    const Integer big("98765432109876543210");
    EXPECT_EQ(integer_to_json(big).dump(), "\"98765432109876543210\"");
    EXPECT_EQ(integer_from_json(integer_to_json(big)), big);
    EXPECT_EQ(integer_from_json(Json(-4)), -4);
    EXPECT_THROW(integer_from_json(Json("12x")), BadArgs);
    EXPECT_THROW(integer_from_json(Json(1.5)), BadArgs);
}

TEST(Json, SeriesLayout)
{
    const GradedSeries s = simple_hilbert(Partition{4, 4, 3}, 3, 3);
    EXPECT_EQ(to_json(s).dump(), R"({"11":9,"12":16,"13":9})");
    EXPECT_EQ(series_from_json(to_json(s)), s);
    EXPECT_EQ(series_from_json(to_json(GradedSeries{})), GradedSeries{});
}

TEST(Json, PatternRoundTrip)
{
    for (const PatternEntry& e : enumerate_A(Partition{3, 2}, 3))
        EXPECT_EQ(pattern_entry_from_json(to_json(e)), e);
    for (const PatternEntry& e : enumerate_K(Partition{2, 1}, 3))
        EXPECT_EQ(pattern_entry_from_json(Json::parse(to_json(e).dump())), e);
    const PatternEntry top = enumerate_A(Partition{3, 2}, 3).back();
    const Json j = to_json(top);
    EXPECT_EQ(j["lambda_of"], "5,5,5");
    EXPECT_EQ(j["d"], 8);
    EXPECT_EQ(j["b"], 2);
    Json bad = j;
    bad["b"] = 3;
    EXPECT_THROW(pattern_entry_from_json(bad), BadArgs);
}

TEST(Json, CharacterRoundTrip)
{
    const GLCharacter ch = simple_character(Partition{2, 1}, 3, 2);
    const GLCharacter back = character_from_json(Json::parse(to_json(ch).dump()), 3, 2);
    EXPECT_EQ(back, ch);
    EXPECT_EQ(to_json(simple_character(Partition{3, 3, 3}, 3, 3)).dump(), R"([{"alpha":"3,3,3","beta":"3,3,3","mult":1}])");
}

TEST(Json, ClassRoundTrip)
{
    const K0Class cls = kac_composition(Partition{3, 2}, 3);
    EXPECT_EQ(k0_from_json(to_json(cls)), cls);
    EXPECT_EQ(k0_from_json(to_json(K0Class{})), K0Class{});
}

TEST(Json, BettiPolynomialRoundTrip)
{
    const BettiPolynomial p = betti_polynomial(Partition{3, 2}, 3, 3);
    EXPECT_EQ(betti_polynomial_from_json(Json::parse(to_json(p).dump())), p);
    EXPECT_EQ(to_json(rectangular_betti(1, 1, 2, 2)).dump(), R"([{"mu":"1","d":0,"mult":1},{"mu":"2,2","d":3,"mult":1}])");
}

TEST(Json, BettiTableRoundTrip)
{
    for (const Partition& l : {Partition{3, 2}, Partition{}, Partition{1}}) {
        const BettiTable t = betti_table(l, 3, 3);
        EXPECT_EQ(betti_table_from_json(Json::parse(to_json(t).dump())), t) << to_string(l);
    }
    const Json j = to_json(betti_table(Partition{3, 2}, 3, 3));
    EXPECT_EQ(j["rows"]["6"].dump(), "[0,0,0,1,0,9,16,9,0]");
    EXPECT_EQ(j["conjectural"], true);
}
