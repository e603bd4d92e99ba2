#include <doctest.h>

#include "beatty/criteria.hpp"
#include "beatty/literal.hpp"
#include "beatty/oracle.hpp"
#include "support/generators.hpp"

using namespace beatty;
using namespace beatty::testsupport;

namespace {

ExactReal phi() { return parse_real("1/2+1/2*sqrt(5)"); }
ExactReal phi2() { return parse_real("3/2+1/2*sqrt(5)"); }

BeattySeq seq(ExactReal a, ExactReal b) { return BeattySeq(std::move(a), std::move(b)); }

}  // namespace

TEST_CASE("complementary") {
    CHECK(complementary(phi(), phi2()));
    CHECK(complementary(ExactReal(2), ExactReal(2)));
    CHECK_FALSE(complementary(phi(), phi()));
    CHECK_THROWS_AS(complementary(ExactReal(0), ExactReal(2)), NonPositive);
}

TEST_CASE("complementary pairs from the 1+w / 1+1/w parametrization") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        auto [a1, a2] = rng.complementary_pair();
        CHECK(complementary(a1, a2));
    }
}

TEST_CASE("skolem condition") {
    CHECK(skolem_condition(seq(phi(), ExactReal(0)), seq(phi2(), ExactReal(0))));
    CHECK(skolem_condition(seq(phi(), phi() / ExactReal(2)),
                           seq(phi2(), phi2() / ExactReal(2))));
    CHECK_FALSE(skolem_condition(seq(phi(), ExactReal(Rational(1, 3))),
                                 seq(phi2(), ExactReal(0))));
    CHECK_THROWS_AS(skolem_condition(seq(ExactReal(2), ExactReal(0)),
                                     seq(ExactReal(2), ExactReal(0))),
                    NotIrrational);
    CHECK_THROWS_AS(skolem_condition(seq(phi(), ExactReal(0)), seq(phi(), ExactReal(0))),
                    NotComplementary);
}

TEST_CASE("skolem classification") {
    SUBCASE("homogeneous pair repeats 0 and misses -1") {
        PartitionVerdict v = skolem_classify(seq(phi(), ExactReal(0)), seq(phi2(), ExactReal(0)));
        CHECK(v.kind == VerdictKind::EventualPartitionWithException);
        REQUIRE(v.exception.has_value());
        CHECK(*v.exception == 0);
    }
    SUBCASE("half-phase offsets partition all of Z") {
        BeattySeq s1 = seq(phi(), phi() / ExactReal(2));
        BeattySeq s2 = seq(phi2(), phi2() / ExactReal(2));
        PartitionVerdict v = skolem_classify(s1, s2);
        CHECK(v.kind == VerdictKind::Partition);
        CHECK(verify_eventual(s1, s2, -10000, 10000).kind == VerdictKind::Partition);
    }
    SUBCASE("broken condition is not an eventual partition") {
        BeattySeq s1 = seq(phi(), ExactReal(Rational(1, 3)));
        BeattySeq s2 = seq(phi2(), ExactReal(0));
        CHECK(skolem_classify(s1, s2).kind == VerdictKind::NotEventualPartition);
        CHECK(verify_eventual(s1, s2, -1000, 1000).kind == VerdictKind::NotEventualPartition);
    }
    SUBCASE("non-canonical inputs classify like their canonical forms") {
        BeattySeq s1 = seq(phi(), ExactReal(0) - ExactReal(3) * phi());
        BeattySeq s2 = seq(phi2(), phi2() * ExactReal(5));
        PartitionVerdict v = skolem_classify(s1, s2);
        CHECK(v.kind == VerdictKind::EventualPartitionWithException);
        CHECK(*v.exception == 0);
    }
    SUBCASE("rational offsets with integral shift place the exception") {
        // beta1 = 2 gives t = 2 at k = 0; move beta2 to keep the condition.
        BeattySeq s1 = seq(phi(), ExactReal(2));
        ExactReal b2 = (ExactReal(1) - ExactReal(2) * phi().reciprocal()) * phi2();
        BeattySeq s2 = seq(phi2(), b2);
        REQUIRE(skolem_condition(s1, s2.normalized().first));
        PartitionVerdict v = skolem_classify(s1, s2);
        CHECK(v.kind == VerdictKind::EventualPartitionWithException);
        CHECK(*v.exception == 2);
        CHECK(verify_eventual(s1, s2.normalized().first, -2000, 2000).same_classification(v));
    }
}

TEST_CASE("fraenkel condition") {
    CHECK(fraenkel_condition(5, 2, ExactReal(0), parse_real("7/5")));
    CHECK_FALSE(fraenkel_condition(5, 2, ExactReal(0), ExactReal(0)));

    // evens/evens fail; evens/odds wrap the sum past r-1
    CHECK_FALSE(fraenkel_condition(2, 1, parse_real("1/2"), parse_real("1/2")));
    CHECK(fraenkel_condition(2, 1, parse_real("1/2"), parse_real("3/2")));
    CHECK(verify_partition({BeattySeq(ExactReal(2), parse_real("1/2")),
                            BeattySeq(ExactReal(2), parse_real("3/2"))},
                           -200, 200));

    // Criterion is invariant under adding a multiple of alpha_i (here alpha2 = 2).
    CHECK(fraenkel_condition(2, 1, parse_real("1/2"), parse_real("5/2")) ==
          fraenkel_condition(2, 1, parse_real("1/2"), parse_real("1/2")));

    CHECK_THROWS_AS(fraenkel_condition(4, 2, ExactReal(0), ExactReal(0)), NotCoprime);
    CHECK_THROWS_AS(fraenkel_condition(2, 3, ExactReal(0), ExactReal(0)), BadModuli);

    SUBCASE("window confirmation of the worked example") {
        BeattySeq s1(parse_real("5/2"), ExactReal(0));
        BeattySeq s2(parse_real("5/3"), parse_real("7/5"));
        CHECK(verify_partition({s1, s2}, -1000, 1000));
        BeattySeq t2(parse_real("5/3"), ExactReal(0));
        CHECK_FALSE(verify_partition({s1, t2}, -1000, 1000));
        // 0 appears in both sequences
        CHECK(s1.contains(0).has_value());
        CHECK(t2.contains(0).has_value());
    }
}

TEST_CASE("fraenkel criterion matches the window oracle exhaustively for small r") {
    for (long long r = 2; r <= 6; ++r) {
        for (long long s = 1; s < r; ++s) {
            if (std::gcd(r, s) != 1) continue;
            long long g = 2 * r * s * (r - s);
            // beta grids over the canonical ranges [0, r/s) and [0, r/(r-s))
            long long n1 = 2 * r * r * (r - s);
            long long n2 = 2 * r * r * s;
            for (long long i = 0; i < n1; i += 3) {      // stride keeps this quick;
                for (long long j = 0; j < n2; j += 3) {  // acceptance runs the full grid
                    ExactReal b1{Rational(i, g)};
                    ExactReal b2{Rational(j, g)};
                    bool cond = fraenkel_condition(r, s, b1, b2);
                    BeattySeq s1(ExactReal(Rational(r, s)), b1);
                    BeattySeq s2(ExactReal(Rational(r, r - s)), b2);
                    bool part = verify_partition({s1, s2}, -60, 60);
                    REQUIRE(cond == part);
                }
            }
        }
    }
}

TEST_CASE("lemma positions") {
    SUBCASE("worked example, k = 0") {
        LemmaPositions p = lemma_positions(5, 2, ExactReal(0), parse_real("7/5"), 0);
        CHECK(p.x.is_zero());
        CHECK(p.y == ExactReal(Rational(4, 25)));
        REQUIRE(p.j.has_value());
        CHECK(*p.j == 0);
    }
    SUBCASE("offset pair failing the criterion has no j0") {
        LemmaPositions p = lemma_positions(5, 2, ExactReal(0), ExactReal(0), 0);
        CHECK(p.x.is_zero());
        CHECK(p.y == ExactReal(1));  // wrap point kept in the top interval
        CHECK_FALSE(p.j.has_value());
    }
    SUBCASE("relative position is constant mod 1") {
        ExactReal b1{Rational(1, 3)}, b2{Rational(7, 5)};
        ExactReal d0 = (b1 * ExactReal(Rational(2, 5)) + b2 * ExactReal(Rational(3, 5))).frac();
        for (long long k = -3; k <= 3; ++k) {
            LemmaPositions p = lemma_positions(5, 2, b1, b2, k);
            CHECK((p.x - p.y - d0).frac().is_zero());
        }
    }
}

TEST_CASE("lemma conditions (2), (3), (4) and the partition agree on a small exhaustive set") {
    for (long long r = 2; r <= 5; ++r) {
        for (long long s = 1; s < r; ++s) {
            if (std::gcd(r, s) != 1) continue;
            long long g = 2 * r * s * (r - s);
            long long n1 = 2 * r * r * (r - s);
            long long n2 = 2 * r * r * s;
            ExactReal arc{Rational(s, r)};
            for (long long i = 0; i < n1; i += 2) {
                for (long long j = 0; j < n2; j += 2) {
                    ExactReal b1{Rational(i, g)};
                    ExactReal b2{Rational(j, g)};

                    bool cond2 = true, cond3 = true;
                    // x_k and y_k are r-periodic in k, so k in [0, r) is the
                    // whole doubly infinite statement.
                    for (long long k = 0; k < r; ++k) {
                        LemmaPositions p = lemma_positions(r, s, b1, b2, k);
                        bool x_in = ExactReal::compare(p.x, arc) == std::strong_ordering::less;
                        bool y_in = p.y.sign() > 0 &&
                                    ExactReal::compare(p.y, arc) != std::strong_ordering::greater;
                        if (x_in != y_in) cond2 = false;
                        if (!p.j) cond3 = false;
                    }
                    bool cond4 = lemma_positions(r, s, b1, b2, 0).j.has_value();
                    bool cond1 = verify_partition({BeattySeq(ExactReal(Rational(r, s)), b1),
                                                   BeattySeq(ExactReal(Rational(r, r - s)), b2)},
                                                  -40, 40);
                    REQUIRE(cond1 == cond2);
                    REQUIRE(cond2 == cond3);
                    REQUIRE(cond3 == cond4);
                }
            }
        }
    }
}

TEST_CASE("relocation to a common starting point") {
    SUBCASE("worked example") {
        auto [b1, b2] = relocate_common_start(5, 2, ExactReal(0), parse_real("7/5"),
                                              parse_real("1/2"));
        CHECK(b1 == parse_real("1/4"));
        CHECK(b2 == parse_real("3/2"));
        // s*b1' + (r-s)*b2' = 5 lies in 5Z
        CHECK(ExactReal(2) * b1 + ExactReal(3) * b2 == ExactReal(5));
    }
    SUBCASE("every nu lands in r*Z and keeps both value sets") {
        for (const char* nu : {"1/3", "1/2", "2/3"}) {
            auto [b1, b2] = relocate_common_start(5, 2, ExactReal(0), parse_real("7/5"),
                                                  parse_real(nu));
            ExactReal combo = ExactReal(2) * b1 + ExactReal(3) * b2;
            Rational q = combo.as_rational();
            REQUIRE(q.is_integer());
            CHECK(q.num() % 5 == 0);
            CHECK(equal_rational(BeattySeq(parse_real("5/2"), ExactReal(0)),
                                 BeattySeq(parse_real("5/2"), b1)));
            CHECK(equal_rational(BeattySeq(parse_real("5/3"), parse_real("7/5")),
                                 BeattySeq(parse_real("5/3"), b2)));
        }
    }
    SUBCASE("a lattice starting point moves off the lattice") {
        // s*beta1 = 4 is integral; after relocation s*beta1' = 4 + nu is not.
        REQUIRE(fraenkel_condition(5, 2, ExactReal(2), ExactReal(0)));
        auto [b1, b2] = relocate_common_start(5, 2, ExactReal(2), ExactReal(0),
                                              parse_real("1/3"));
        CHECK_FALSE((ExactReal(2) * b1).is_integer());
        CHECK_FALSE((ExactReal(3) * b2).is_integer());
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(relocate_common_start(5, 2, ExactReal(0), ExactReal(0),
                                              parse_real("1/2")),
                        CriterionNotSatisfied);
        CHECK_THROWS_AS(relocate_common_start(5, 2, ExactReal(0), parse_real("7/5"),
                                              ExactReal(1)),
                        NuOutOfRange);
        CHECK_THROWS_AS(relocate_common_start(5, 2, ExactReal(0), parse_real("7/5"),
                                              ExactReal(0)),
                        NuOutOfRange);
    }
}

TEST_CASE("two Beatty sequences with complementary moduli partition the positive integers") {
    Rng rng(910);
    for (int i = 0; i < 50; ++i) {
        auto [a1, a2] = rng.complementary_pair();
        CHECK(verify_partition({BeattySeq(a1, ExactReal(0)), BeattySeq(a2, ExactReal(0))},
                               1, 10001));
    }
    // A handful at the full documented window size.
    Rng rng2(911);
    for (int i = 0; i < 5; ++i) {
        auto [a1, a2] = rng2.complementary_pair();
        CHECK(verify_partition({BeattySeq(a1, ExactReal(0)), BeattySeq(a2, ExactReal(0))},
                               1, 100001));
    }
}
