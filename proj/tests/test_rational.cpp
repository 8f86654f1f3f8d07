#include <catch2/catch_amalgamated.hpp>

#include "parvo/rational.hpp"

using namespace parvo;

TEST_CASE("rationals are canonical") {
    CHECK(parse_rat("3/6") == rat(1, 2));
    CHECK(parse_rat("-4/8") == rat(-1, 2));
    CHECK(parse_rat("7") == 7);
    CHECK(parse_rat("0/5") == 0);
    CHECK(to_string(parse_rat("10/4")) == "5/2");
    CHECK(parse_rat("-10/4").get_den() == 2);  // positive denominator
}

TEST_CASE("rational parsing rejects junk") {
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("-"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("3/"), std::invalid_argument);
}

TEST_CASE("floor and ceil") {
    CHECK(rat_floor(rat(7, 2)) == 3);
    CHECK(rat_ceil(rat(7, 2)) == 4);
    CHECK(rat_floor(rat(-7, 2)) == -4);
    CHECK(rat_ceil(rat(-7, 2)) == -3);
    CHECK(rat_floor(rat(4)) == 4);
    CHECK(rat_ceil(rat(4)) == 4);
}

TEST_CASE("half integer detection") {
    CHECK(is_half_integer(rat(1, 2)));
    CHECK(is_half_integer(rat(3)));
    CHECK(is_half_integer(rat(-5, 2)));
    CHECK(!is_half_integer(rat(1, 3)));
    CHECK(!is_half_integer(rat(5, 4)));
}

TEST_CASE("lexicographic order") {
    CHECK(lex_less(ZVec{0, 1}, ZVec{1, 0}));
    CHECK(!lex_less(ZVec{1, 0}, ZVec{0, 1}));
    CHECK(lex_less(QVec{rat(1, 2), rat(0)}, QVec{rat(1, 2), rat(1, 3)}));
}
