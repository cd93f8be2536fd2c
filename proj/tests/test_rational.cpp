#include "doctest.h"
#include "superschur/rational.hpp"

using namespace superschur;

TEST_CASE("parse_rational accepts integers and fractions in lowest or unreduced form") {
    CHECK(*parse_rational("0") == Rat(0));
    CHECK(*parse_rational("7") == Rat(7));
    CHECK(*parse_rational("-3") == Rat(-3));
    CHECK(*parse_rational("+2") == Rat(2));
    CHECK(*parse_rational("1/2") == rat(1, 2));
    CHECK(*parse_rational("-4/6") == rat(-2, 3));
    CHECK(*parse_rational("10/5") == Rat(2));
    CHECK(*parse_rational("  3/4 ") == rat(3, 4));
}

TEST_CASE("parse_rational rejects non-rational text") {
    CHECK_FALSE(parse_rational(""));
    CHECK_FALSE(parse_rational("0.5"));
    CHECK_FALSE(parse_rational("1e3"));
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational("2/"));
    CHECK_FALSE(parse_rational("/3"));
    CHECK_FALSE(parse_rational("a"));
    CHECK_FALSE(parse_rational("1/2/3"));
    CHECK_FALSE(parse_rational("1 2"));
    CHECK_FALSE(parse_rational("--1"));
}

TEST_CASE("to_string prints canonical lowest terms") {
    CHECK(to_string(Rat(5)) == "5");
    CHECK(to_string(rat(-1, 2)) == "-1/2");
    CHECK(to_string(rat(4, 8)) == "1/2");
    CHECK(to_string(Rat(0)) == "0");
}

TEST_CASE("round trip through text is exact") {
    for (const char* s : {"0", "17", "-17", "3/7", "-22/7", "1000000000000/3"}) {
        auto v = parse_rational(s);
        REQUIRE(v);
        CHECK(to_string(*v) == s);
        CHECK(*parse_rational(to_string(*v)) == *v);
    }
}

TEST_CASE("arithmetic stays exact far beyond machine precision") {
    Rat x = rat(1, 3);
    Rat sum(0);
    for (int i = 0; i < 300; ++i) sum += x;
    CHECK(sum == Rat(100));
    Rat big = *parse_rational("123456789123456789/98765432198765432");
    CHECK(big * Rat(2) / Rat(2) == big);
}
