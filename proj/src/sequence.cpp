#include "beatty/sequence.hpp"

namespace beatty {

BeattySeq::BeattySeq(ExactReal alpha, ExactReal beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.sign() <= 0) throw BadModuli("alpha must be positive");
    inv_alpha_ = alpha_.reciprocal();
    alpha_gt_one_ = ExactReal::compare(alpha_, ExactReal(1)) == std::strong_ordering::greater;
}

bool BeattySeq::is_canonical() const {
    return beta_.sign() >= 0 && ExactReal::compare(beta_, alpha_) == std::strong_ordering::less;
}

std::pair<BeattySeq, BigInt> BeattySeq::normalized() const {
    BigInt shift = (beta_ * inv_alpha_).floor();
    if (shift == 0) return {*this, BigInt(0)};
    ExactReal beta = beta_ - ExactReal(shift) * alpha_;
    return {BeattySeq(alpha_, std::move(beta)), shift};
}

BigInt BeattySeq::term(const BigInt& n) const {
    return (ExactReal(n) * alpha_ + beta_).floor();
}

std::vector<std::pair<long long, BigInt>> BeattySeq::generate(long long n_lo, long long n_hi) const {
    if (n_lo > n_hi) throw InvalidRange("generate: n_lo > n_hi");
    std::vector<std::pair<long long, BigInt>> out;
    out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    // Incremental evaluation: keep n*alpha + beta and add alpha per step.
    ExactReal x = ExactReal(BigInt(n_lo)) * alpha_ + beta_;
    for (long long n = n_lo; n <= n_hi; ++n) {
        out.emplace_back(n, x.floor());
        x = x + alpha_;
    }
    return out;
}

std::vector<BigInt> BeattySeq::values(long long n_lo, long long n_hi) const {
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (auto& [n, v] : generate(n_lo, n_hi)) out.push_back(std::move(v));
    return out;
}

BeattySeq::Membership BeattySeq::membership(const BigInt& k) const {
    // floor(n*alpha + beta) = k  <=>  (k - beta)/alpha <= n < (k+1 - beta)/alpha:
    // the candidate is the ceiling of the left end, confirmed against the
    // right end.
    Membership m;
    ExactReal lo = (ExactReal(k) - beta_) * inv_alpha_;
    BigInt n = lo.ceil();
    ExactReal hi = lo + inv_alpha_;
    if (ExactReal::compare(ExactReal(n), hi) != std::strong_ordering::less) return m;
    m.present = true;
    m.index = n;
    // A second matching index is only possible when alpha <= 1.
    m.ambiguous = !alpha_gt_one_ &&
                  ExactReal::compare(ExactReal(n + 1), hi) == std::strong_ordering::less;
    return m;
}

std::optional<BigInt> BeattySeq::contains(const BigInt& k) const {
    Membership m = membership(k);
    if (!m.present) return std::nullopt;
    return m.index;
}

Rational BeattySeq::density_estimate(long long lo, long long hi) const {
    if (lo >= hi) throw InvalidRange("density_estimate: lo >= hi");
    // For integer bounds, floor(n*alpha+beta) lands in [lo, hi) exactly when
    // n*alpha+beta does, so the covering indices form one integer interval.
    BigInt n_lo = ((ExactReal(BigInt(lo)) - beta_) * inv_alpha_).ceil();
    BigInt n_hi = ((ExactReal(BigInt(hi)) - beta_) * inv_alpha_).ceil();
    return Rational(n_hi - n_lo, BigInt(hi) - BigInt(lo));
}

bool equal_rational(const BeattySeq& s1, const BeattySeq& s2) {
    if (!s1.alpha().is_rational() || !s2.alpha().is_rational())
        throw NotRational("equal_rational requires rational moduli");
    if (!(s1.alpha() == s2.alpha()))
        throw AlphasDiffer("equal_rational requires a common modulus");
    if (!s1.is_canonical() || !s2.is_canonical())
        throw BadModuli("equal_rational requires canonical offsets");
    const BigInt& s = s1.alpha().as_rational().den();
    ExactReal scale{Rational(s)};
    return (s1.beta() * scale).floor() == (s2.beta() * scale).floor();
}

}  // namespace beatty
