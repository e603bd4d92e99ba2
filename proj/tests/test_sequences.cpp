#include <doctest.h>

#include <algorithm>

#include "beatty/literal.hpp"
#include "beatty/sequence.hpp"
#include "support/generators.hpp"

using namespace beatty;
using namespace beatty::testsupport;

namespace {

BeattySeq seq(const char* alpha, const char* beta = "0") {
    return BeattySeq(parse_real(alpha), parse_real(beta));
}

std::vector<BigInt> vals(const BeattySeq& s, long long lo, long long hi) {
    return s.values(lo, hi);
}

}  // namespace

TEST_CASE("term") {
    CHECK(seq("1/2+1/2*sqrt(5)").term(5) == 8);
    CHECK(seq("1/2+1/2*sqrt(5)").term(0) == 0);
    CHECK(seq("22/7", "1/3").term(0) == 0);
    CHECK(seq("5/2").term(3) == 7);
    CHECK(seq("5/3", "7/5").term(2) == 4);  // floor(71/15)
    CHECK_THROWS_AS(seq("0"), BadModuli);
    CHECK_THROWS_AS(seq("-1*sqrt(2)"), BadModuli);
}

TEST_CASE("generate") {
    CHECK(vals(seq("1/2+1/2*sqrt(5)"), 1, 5) == std::vector<BigInt>{1, 3, 4, 6, 8});
    CHECK(vals(seq("1"), 0, 3) == std::vector<BigInt>{0, 1, 2, 3});
    CHECK(vals(seq("5/2"), 0, 4) == std::vector<BigInt>{0, 2, 5, 7, 10});
    CHECK_THROWS_AS(seq("2").generate(3, 2), InvalidRange);

    auto pairs = seq("5/2", "1/2").generate(-2, 2);
    REQUIRE(pairs.size() == 5);
    CHECK(pairs.front().first == -2);
    for (const auto& [n, v] : pairs) CHECK(v == seq("5/2", "1/2").term(n));
}

TEST_CASE("contains") {
    BeattySeq wythoff = seq("1/2+1/2*sqrt(5)");
    CHECK(wythoff.contains(4) == BigInt(3));
    CHECK_FALSE(wythoff.contains(5).has_value());
    CHECK_FALSE(seq("2").contains(7).has_value());
    CHECK(seq("2").contains(8) == BigInt(4));
}

TEST_CASE("contains reports the smallest index and flags ambiguity when alpha <= 1") {
    BeattySeq half = seq("1/2");
    auto m = half.membership(BigInt(0));
    CHECK(m.present);
    CHECK(m.index == 0);
    CHECK(m.ambiguous);  // indices 0 and 1 both map to 0

    auto u = seq("2").membership(BigInt(4));
    CHECK(u.present);
    CHECK_FALSE(u.ambiguous);
}

TEST_CASE("normalize") {
    auto [n1, shift1] = seq("5/2", "13/2").normalized();
    CHECK(n1.beta() == parse_real("3/2"));
    CHECK(shift1 == 2);

    auto [n2, shift2] = seq("1/2+1/2*sqrt(5)").normalized();
    CHECK(n2.beta().is_zero());
    CHECK(shift2 == 0);

    auto [n3, shift3] = seq("2", "-3").normalized();
    CHECK(n3.beta() == ExactReal(1));
    CHECK(shift3 == -2);

    CHECK(n1.is_canonical());
    CHECK_FALSE(seq("2", "-3").is_canonical());
}

TEST_CASE("normalization reindexes without changing values") {
    Rng rng(2024);
    for (int i = 0; i < 50; ++i) {
        ExactReal alpha = ExactReal(1) + rng.positive_quadratic(20, 8);
        // offset in the same field, far outside the canonical range
        ExactReal beta = alpha * ExactReal(rng.rational(40, 7)) + ExactReal(rng.rational(40, 7));
        BeattySeq s(alpha, beta);
        auto [canon, shift] = s.normalized();
        long long sh = static_cast<long long>(shift);
        // beta' = beta - shift*alpha, so term(S', n) = term(S, n - shift) and
        // the doubly infinite value sets coincide.
        for (long long n = -40; n <= 40; ++n) {
            CHECK(canon.term(n) == s.term(n - sh));
        }
    }
}

TEST_CASE("equal_rational") {
    CHECK(equal_rational(seq("5/2", "1/5"), seq("5/2", "2/5")));
    CHECK_FALSE(equal_rational(seq("5/2", "2/5"), seq("5/2", "3/5")));
    CHECK(equal_rational(seq("5/2", "2/5"), seq("5/2", "2/5")));
    CHECK_THROWS_AS(equal_rational(seq("1/2+1/2*sqrt(5)"), seq("1/2+1/2*sqrt(5)")), NotRational);
    CHECK_THROWS_AS(equal_rational(seq("5/2"), seq("5/3")), AlphasDiffer);
    CHECK_THROWS_AS(equal_rational(seq("5/2", "13/2"), seq("5/2")), BadModuli);
}

TEST_CASE("equal_rational matches value sets on a window") {
    // Window check of the floor(s*beta) classes for alpha = 5/2.
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            BeattySeq s1 = BeattySeq(parse_real("5/2"), ExactReal(Rational(i, 4)));
            BeattySeq s2 = BeattySeq(parse_real("5/2"), ExactReal(Rational(j, 4)));
            bool same_values = vals(s1, -100, 100) == vals(s2, -100, 100);
            CHECK(equal_rational(s1, s2) == same_values);
        }
    }
}

TEST_CASE("density") {
    CHECK(seq("2").density_estimate(0, 1000) == Rational(1, 2));
    CHECK(seq("5/2").density_estimate(0, 1000) == Rational(400, 1000));

    BeattySeq w = seq("1/2+1/2*sqrt(5)");
    Rational est = w.density_estimate(1, 10001);
    CHECK(est == Rational(6180, 10000));
    // |est - 1/phi| < 1e-3, decided exactly
    ExactReal diff = ExactReal(est) - w.inv_alpha();
    ExactReal bound{Rational(1, 1000)};
    CHECK(ExactReal::compare(diff, bound) == std::strong_ordering::less);
    CHECK(ExactReal::compare(-bound, diff) == std::strong_ordering::less);

    CHECK_THROWS_AS(w.density_estimate(10, 10), InvalidRange);
}

TEST_CASE("density error bound (1+alpha)/(hi-lo) on random sequences") {
    Rng rng(556677);
    for (int i = 0; i < 40; ++i) {
        ExactReal alpha = ExactReal(1) + rng.positive_quadratic(15, 6);
        BeattySeq s(alpha, rng.canonical_beta(alpha));
        long long lo = rng.uniform(-500, 0), hi = rng.uniform(1, 500);
        ExactReal diff = ExactReal(s.density_estimate(lo, hi)) - s.inv_alpha();
        if (diff.sign() < 0) diff = -diff;
        ExactReal bound = (ExactReal(1) + alpha) / ExactReal(hi - lo);
        CHECK(ExactReal::compare(diff, bound) != std::strong_ordering::greater);
    }
}

TEST_CASE("contains inverts term when alpha > 1") {
    Rng rng(808);
    for (int i = 0; i < 60; ++i) {
        ExactReal alpha = ExactReal(1) + rng.positive_quadratic(12, 6);
        BeattySeq s(alpha, rng.canonical_beta(alpha));
        for (long long n = -25; n <= 25; ++n) {
            auto back = s.contains(s.term(n));
            REQUIRE(back.has_value());
            CHECK(*back == n);
        }
    }
}

TEST_CASE("index shift identity") {
    Rng rng(4llu);
    for (int i = 0; i < 40; ++i) {
        ExactReal alpha = rng.positive_quadratic(15, 6);
        ExactReal beta = alpha * ExactReal(rng.rational(8, 6)) + ExactReal(rng.rational(8, 6));
        for (long long m : {-3LL, 1LL, 7LL}) {
            BeattySeq s(alpha, beta);
            BeattySeq shifted(alpha, beta + ExactReal(m) * alpha);
            for (long long n = -10; n <= 10; ++n) {
                CHECK(shifted.term(n) == s.term(n + m));
            }
        }
    }
}
