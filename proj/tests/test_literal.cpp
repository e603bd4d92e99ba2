#include <doctest.h>

#include "beatty/io.hpp"
#include "beatty/literal.hpp"
#include "support/generators.hpp"

using namespace beatty;
using namespace beatty::testsupport;

TEST_CASE("grammar instances") {
    CHECK(parse_real("5/2") == ExactReal(Rational(5, 2)));
    CHECK(parse_real("1/2+1/2*sqrt(5)") ==
          ExactReal::quadratic(Rational(1, 2), Rational(1, 2), 5));
    CHECK(parse_real("-1*sqrt(2)") == -ExactReal::sqrt_of(2));
    CHECK(parse_real("1/2-1/2*sqrt(5)") ==
          ExactReal::quadratic(Rational(1, 2), Rational(-1, 2), 5));
    CHECK(parse_real("-7") == ExactReal(-7));
    CHECK(parse_real(" 3 / 2 + 1 / 4 * sqrt( 7 ) ") ==
          ExactReal::quadratic(Rational(3, 2), Rational(1, 4), 7));
    CHECK(parse_real("0*sqrt(5)").is_rational());
}

TEST_CASE("rejects decimals and malformed input") {
    CHECK_THROWS_AS(parse_real("0.5"), ParseError);
    CHECK_THROWS_AS(parse_real("1/2+0.25*sqrt(5)"), ParseError);
    CHECK_THROWS_AS(parse_real(""), ParseError);
    CHECK_THROWS_AS(parse_real("1/0"), ParseError);
    CHECK_THROWS_AS(parse_real("sqrt(2)"), ParseError);
    CHECK_THROWS_AS(parse_real("1+2"), ParseError);
    CHECK_THROWS_AS(parse_real("1*sqrt(2)junk"), ParseError);
    CHECK_THROWS_AS(parse_real("1*sqrt(8)"), RadicandNotSquarefree);
    CHECK_THROWS_AS(parse_real("1*sqrt(1)"), RadicandNotSquarefree);

    try {
        parse_real("1/2+x");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("round trip: parse(str(x)) == x") {
    Rng rng(31337);
    for (int i = 0; i < 2000; ++i) {
        ExactReal x = rng.quadratic();
        CHECK(parse_real(x.str()) == x);
        ExactReal r{rng.rational(1000, 60)};
        CHECK(parse_real(r.str()) == r);
    }
}

TEST_CASE("json round trip keeps values exact") {
    Rng rng(777);
    for (int i = 0; i < 500; ++i) {
        ExactReal x = rng.quadratic();
        Json j = json_of(x);
        CHECK(real_from_json(j) == x);
        CHECK(j.at("a").is_string());
        CHECK(j.at("b").is_string());
        CHECK(j.at("d").is_number_integer());
    }
    BeattySeq s(parse_real("1/2+1/2*sqrt(5)"), ExactReal(Rational(1, 3)));
    BeattySeq back = seq_from_json(json_of(s));
    CHECK(back.alpha() == s.alpha());
    CHECK(back.beta() == s.beta());
}
