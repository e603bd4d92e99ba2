#include "beatty/criteria.hpp"

#include <numeric>

namespace beatty {

PartitionVerdict PartitionVerdict::with_exception(BigInt n0) {
    PartitionVerdict v;
    v.kind = VerdictKind::EventualPartitionWithException;
    v.exception = std::move(n0);
    return v;
}

PartitionVerdict PartitionVerdict::not_eventual(std::vector<BigInt> repeated,
                                                std::vector<BigInt> missing) {
    PartitionVerdict v;
    v.kind = VerdictKind::NotEventualPartition;
    v.repeated = std::move(repeated);
    v.missing = std::move(missing);
    return v;
}

const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Partition: return "Partition";
        case VerdictKind::EventualPartitionWithException: return "EventualPartitionWithException";
        case VerdictKind::NotEventualPartition: return "NotEventualPartition";
    }
    return "?";
}

bool complementary(const ExactReal& alpha1, const ExactReal& alpha2) {
    if (alpha1.sign() <= 0 || alpha2.sign() <= 0)
        throw NonPositive("complementary: moduli must be positive");
    return alpha1.reciprocal() + alpha2.reciprocal() == ExactReal(1);
}

static void require_skolem_preconditions(const BeattySeq& s1, const BeattySeq& s2) {
    if (!s1.alpha().is_irrational() || !s2.alpha().is_irrational())
        throw NotIrrational("Skolem criterion requires irrational moduli");
    if (!complementary(s1.alpha(), s2.alpha()))
        throw NotComplementary("Skolem criterion requires 1/a1 + 1/a2 = 1");
}

bool skolem_condition(const BeattySeq& s1, const BeattySeq& s2) {
    require_skolem_preconditions(s1, s2);
    ExactReal sum = s1.beta() * s1.inv_alpha() + s2.beta() * s2.inv_alpha();
    return sum.is_integer();
}

// Integer t with t = beta + k*alpha for some integer k, if one exists.  In
// Q(sqrt(d)) the irrational coordinates force k, then the rational part must
// come out integral; for rational beta the only candidate is k = 0.
static std::optional<BigInt> integer_in_orbit(const ExactReal& beta, const ExactReal& alpha) {
    const Rational& ba = beta.sqrt_coeff();
    const Rational& aa = alpha.sqrt_coeff();
    Rational k = -ba / aa;
    if (!k.is_integer()) return std::nullopt;
    ExactReal t = beta + ExactReal(k.num()) * alpha;
    if (!t.is_integer()) return std::nullopt;
    return t.as_rational().num();
}

PartitionVerdict skolem_classify(const BeattySeq& s1, const BeattySeq& s2) {
    require_skolem_preconditions(s1, s2);
    BeattySeq c1 = s1.normalized().first;
    BeattySeq c2 = s2.normalized().first;
    if (!skolem_condition(c1, c2)) return PartitionVerdict::not_eventual();
    auto n0 = integer_in_orbit(c1.beta(), c1.alpha());
    if (n0) return PartitionVerdict::with_exception(std::move(*n0));
    return PartitionVerdict::partition();
}

static void require_fraenkel_moduli(long long r, long long s) {
    if (r <= s || s < 1) throw BadModuli("need r > s >= 1");
    if (std::gcd(r, s) != 1) throw NotCoprime("r and s must be coprime");
}

bool fraenkel_condition(long long r, long long s, const ExactReal& beta1,
                        const ExactReal& beta2) {
    require_fraenkel_moduli(r, s);
    BigInt lhs = (ExactReal(s) * beta1).floor() + (ExactReal(r - s) * beta2).floor();
    BigInt m = lhs % r;
    if (m < 0) m += r;
    return m == r - 1;
}

LemmaPositions lemma_positions(long long r, long long s, const ExactReal& beta1,
                               const ExactReal& beta2, long long k) {
    require_fraenkel_moduli(r, s);
    Rational alpha1(r, s), alpha2(r, r - s);
    ExactReal x0 = beta1 * ExactReal(alpha1.reciprocal());
    // x advances s/r toward O per unit time; y moves the other way by
    // (r-s)/r and is kept in (0,1] so the wrap point lands in the top
    // interval.  x_k - y_k stays congruent to d0 mod 1.
    ExactReal x = (x0 - ExactReal(Rational(BigInt(k) * s, BigInt(r)))).frac();
    ExactReal y_raw = beta2 * ExactReal(alpha2.reciprocal()) -
                      ExactReal(Rational(BigInt(k) * (r - s), BigInt(r)));
    ExactReal y = ExactReal(1) - y_raw.frac();

    LemmaPositions out{x, y, std::nullopt};
    // x in [j/r, (j+1)/r)  <=>  j = floor(r*x)
    BigInt jx = (ExactReal(r) * x).floor();
    // y in (j/r, (j+1)/r]  <=>  j = ceil(r*y) - 1; y in (0,1] makes this total
    BigInt jy = (ExactReal(r) * y).ceil() - 1;
    if (jx == jy) out.j = static_cast<long long>(jx);
    return out;
}

std::pair<ExactReal, ExactReal> relocate_common_start(long long r, long long s,
                                                      const ExactReal& beta1,
                                                      const ExactReal& beta2,
                                                      const ExactReal& nu) {
    if (!fraenkel_condition(r, s, beta1, beta2))
        throw CriterionNotSatisfied("relocation requires the partition criterion");
    if (nu.sign() <= 0 || ExactReal::compare(nu, ExactReal(1)) != std::strong_ordering::less)
        throw NuOutOfRange("nu must satisfy 0 < nu < 1");
    ExactReal f1{Rational((ExactReal(s) * beta1).floor())};
    ExactReal f2{Rational((ExactReal(r - s) * beta2).floor())};
    ExactReal b1 = (f1 + nu) / ExactReal(s);
    ExactReal b2 = (f2 + ExactReal(1) - nu) / ExactReal(r - s);
    return {b1, b2};
}

}  // namespace beatty
