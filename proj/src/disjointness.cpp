#include "beatty/disjointness.hpp"

#include <numeric>

namespace beatty {

const char* to_string(FindingKind k) {
    switch (k) {
        case FindingKind::RationalRatio: return "RationalRatio";
        case FindingKind::MNWitness: return "MNWitness";
        case FindingKind::Neither: return "Neither";
    }
    return "?";
}

bool crt_coprime(const BigInt& n, const BigInt& m) {
    if (n < 1 || m < 1) throw NonPositive("crt_coprime: arguments must be >= 1");
    return gcd(n, m) == 1;
}

DisjointnessFinding skolem_necessary(const BeattySeq& s1, const BeattySeq& s2) {
    const ExactReal& a1 = s1.alpha();
    const ExactReal& a2 = s2.alpha();
    ExactReal ratio = a1 / a2;  // throws MixedRadicands for incompatible fields
    if (ratio.is_rational()) return {FindingKind::RationalRatio, {}, {}};

    // m*u + n*v = 1 for u = 1/alpha1, v = 1/alpha2, split into rational and
    // sqrt(d) coordinates.  The determinant is nonzero once a rational ratio
    // is excluded.
    const ExactReal u = s1.inv_alpha();
    const ExactReal v = s2.inv_alpha();
    Rational det = u.rat_part() * v.sqrt_coeff() - v.rat_part() * u.sqrt_coeff();
    Rational m = v.sqrt_coeff() / det;
    Rational n = -u.sqrt_coeff() / det;
    if (!m.is_integer() || !n.is_integer() || !m.is_positive() || !n.is_positive())
        return {FindingKind::Neither, {}, {}};

    ExactReal integrality = ExactReal(m) * s1.beta() * u + ExactReal(n) * s2.beta() * v;
    if (!integrality.is_integer()) return {FindingKind::Neither, {}, {}};
    return {FindingKind::MNWitness, m.num(), n.num()};
}

JrtParams jrt_params(const Rational& alpha1, const Rational& alpha2) {
    if (!alpha1.is_positive() || !alpha2.is_positive())
        throw NonPositive("jrt: moduli must be positive");
    JrtParams jp;
    jp.p1 = alpha1.num();
    jp.q1 = alpha1.den();
    jp.p2 = alpha2.num();
    jp.q2 = alpha2.den();
    jp.p = gcd(jp.p1, jp.p2);
    jp.q = gcd(jp.q1, jp.q2);
    jp.u1 = jp.q1 / jp.q;
    jp.u2 = jp.q2 / jp.q;
    jp.rhs = jp.p - 2 * jp.u1 * jp.u2 * (jp.q - 1);
    return jp;
}

JrtResult jrt_coprime(const Rational& alpha1, const Rational& alpha2) {
    JrtParams jp = jrt_params(alpha1, alpha2);
    for (BigInt k = 1; k * jp.u1 < jp.rhs; ++k) {
        BigInt rem = jp.rhs - k * jp.u1;
        if (rem % jp.u2 == 0) {
            return {false, std::make_pair(k, BigInt(rem / jp.u2))};
        }
    }
    return {true, std::nullopt};
}

static void require_gamma_inputs(const ExactReal& gamma, long long r, long long s) {
    if (r < 1 || s < 1) throw NonPositive("gamma criterion: r, s must be >= 1");
    if (std::gcd(r, s) != 1) throw NotCoprime("gamma criterion: r, s must be coprime");
    if (!gamma.is_irrational()) throw NotIrrational("gamma criterion: gamma must be irrational");
}

bool gamma_disjoint_exists(const ExactReal& gamma, long long r, long long s) {
    require_gamma_inputs(gamma, r, s);
    return ExactReal::compare(gamma, ExactReal(2)) == std::strong_ordering::greater;
}

std::pair<ExactReal, ExactReal> gamma_witness(const ExactReal& gamma, long long r, long long s) {
    if (!gamma_disjoint_exists(gamma, r, s))
        throw NoWitness("no disjoint offsets exist for gamma <= 2");
    ExactReal beta1{0};
    ExactReal beta2 = gamma / ExactReal(2);
    BeattySeq s1(ExactReal(r) * gamma, beta1);
    BeattySeq s2(ExactReal(s) * gamma, beta2);
    if (!disjoint_window(s1, s2, -1024, 1024).empty())
        throw VerificationFailed("constructed offsets fail the window check");
    return {beta1, beta2};
}

bool lattice_condition(const ExactReal& t, const ExactReal& rho, const ExactReal& alpha2) {
    ExactReal fr = t.frac();
    ExactReal inv = alpha2.reciprocal();
    ExactReal lower = (ExactReal(1) - fr) * inv;
    ExactReal upper = ExactReal(1) - fr * inv;
    return ExactReal::compare(lower, rho) != std::strong_ordering::greater &&
           ExactReal::compare(rho, upper) == std::strong_ordering::less;
}

bool offsets_all_intersect(const ExactReal& gamma, long long r, long long s,
                           long long samples, long long lo, long long hi) {
    require_gamma_inputs(gamma, r, s);
    if (samples < 1) throw InvalidRange("offsets_all_intersect: samples must be >= 1");
    ExactReal alpha1 = ExactReal(r) * gamma;
    ExactReal alpha2 = ExactReal(s) * gamma;
    BeattySeq s1(alpha1, ExactReal(0));
    for (long long i = 0; i < samples; ++i) {
        ExactReal beta2 = alpha2 * ExactReal(Rational(i, samples));
        BeattySeq s2(alpha2, beta2);
        if (disjoint_window(s1, s2, lo, hi).empty()) return false;
    }
    return true;
}

CoprimeDecision decide_coprime(const ExactReal& alpha1, const ExactReal& alpha2) {
    if (alpha1.sign() <= 0 || alpha2.sign() <= 0)
        throw NonPositive("decide_coprime: moduli must be positive");
    CoprimeDecision d;

    if (alpha1.is_quadratic() && alpha2.is_quadratic() &&
        alpha1.radicand() != alpha2.radicand()) {
        // Independent radicands: the ratio is irrational and the m/n equation
        // has no solution, so disjoint offsets cannot exist.
        d.coprime = true;
        d.method = "independent-radicands";
        return d;
    }

    ExactReal ratio = alpha1 / alpha2;
    if (ratio.is_rational()) {
        if (alpha1.is_rational()) {
            JrtResult jrt = jrt_coprime(alpha1.as_rational(), alpha2.as_rational());
            d.coprime = jrt.coprime;
            d.method = "jrt";
            d.jrt_witness = jrt.witness;
            return d;
        }
        // Irrational moduli of rational ratio r/s: disjoint offsets exist
        // exactly when the common factor exceeds 2.
        const Rational& rs = ratio.as_rational();
        ExactReal gamma = alpha1 / ExactReal(Rational(rs.num()));
        d.gamma = gamma;
        d.method = "gamma";
        d.coprime = ExactReal::compare(gamma, ExactReal(2)) == std::strong_ordering::less;
        return d;
    }

    // Irrational ratio: not coprime iff positive integers m, n solve
    // m/alpha1 + n/alpha2 = 1 (offsets completing a disjoint pair then exist).
    d.method = "skolem-necessary";
    const ExactReal u = alpha1.reciprocal();
    const ExactReal v = alpha2.reciprocal();
    Rational det = u.rat_part() * v.sqrt_coeff() - v.rat_part() * u.sqrt_coeff();
    Rational m = v.sqrt_coeff() / det;
    Rational n = -u.sqrt_coeff() / det;
    if (m.is_integer() && n.is_integer() && m.is_positive() && n.is_positive()) {
        d.coprime = false;
        d.mn_witness = std::make_pair(m.num(), n.num());
    }
    return d;
}

}  // namespace beatty
