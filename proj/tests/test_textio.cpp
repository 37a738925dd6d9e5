#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multidb/textio.hpp"

using namespace multidb;

TEST_CASE("digit rendering for small alphabets") {
    CHECK(to_string(Seq{0, 1, 0, 2}) == "0102");
    CHECK(to_string(Seq{}) == "");
    CHECK(parse_seq("0102") == Seq{0, 1, 0, 2});
    CHECK(parse_seq("") == Seq{});
    CHECK_THROWS_AS(parse_seq("01a"), std::invalid_argument);
}

TEST_CASE("bracketed rendering for wide alphabets") {
    Seq s{0, 11, 3};
    CHECK(to_string(s) == "[0,11,3]");
    CHECK(parse_seq("[0,11,3]") == s);
    CHECK(parse_seq("[7]") == Seq{7});
    CHECK_THROWS_AS(parse_seq("[1,x]"), std::invalid_argument);
}

TEST_CASE("cycles") {
    CHECK(to_string(CyclicSeq(parse_seq("1100"))) == "(0011)");
    CHECK(parse_cyclic("(1100)") == CyclicSeq(parse_seq("0011")));
    CHECK_THROWS_AS(parse_cyclic("0011"), std::invalid_argument);
}

TEST_CASE("multicyclic groups") {
    MultiCyclicSeq mc({parse_seq("0001"), parse_seq("011"), parse_seq("1")});
    CHECK(to_string(mc) == "(0001)(011)(1)");
    CHECK(parse_multicyclic("(0001)(011)(1)") == mc);
    // Whitespace between groups is ignored; rotations canonicalize.
    CHECK(parse_multicyclic(" (1000) (110)\t(1) ") == mc);
    CHECK(parse_multicyclic("") == MultiCyclicSeq{});
    CHECK_THROWS_AS(parse_multicyclic("(01)x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_multicyclic("(01"), std::invalid_argument);
    CHECK_THROWS_AS(parse_multicyclic("(0101)"), std::invalid_argument);
}
