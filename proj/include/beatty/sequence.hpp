#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "beatty/exact_real.hpp"

namespace beatty {

// Doubly infinite Beatty sequence: the values floor(n*alpha + beta) over all
// integers n, with alpha > 0.  Canonical form has 0 <= beta < alpha; shifting
// beta by a multiple of alpha leaves the value set unchanged.
class BeattySeq {
public:
    BeattySeq(ExactReal alpha, ExactReal beta);

    const ExactReal& alpha() const { return alpha_; }
    const ExactReal& beta() const { return beta_; }
    const ExactReal& inv_alpha() const { return inv_alpha_; }

    bool is_canonical() const;

    // Canonical twin plus the shift m with beta' = beta - m*alpha.
    std::pair<BeattySeq, BigInt> normalized() const;

    BigInt term(const BigInt& n) const;
    BigInt term(long long n) const { return term(BigInt(n)); }

    // Index/value pairs for n in n_lo..n_hi inclusive.
    std::vector<std::pair<long long, BigInt>> generate(long long n_lo, long long n_hi) const;
    std::vector<BigInt> values(long long n_lo, long long n_hi) const;

    struct Membership {
        bool present = false;
        BigInt index;    // smallest matching index when present
        bool ambiguous = false;  // more than one index matches (alpha <= 1)
    };
    // Analytic membership: the candidate index is ceil((k - beta)/alpha),
    // confirmed exactly; no scanning.
    Membership membership(const BigInt& k) const;
    std::optional<BigInt> contains(const BigInt& k) const;
    std::optional<BigInt> contains(long long k) const { return contains(BigInt(k)); }

    // Fraction of [lo, hi) covered by the value set; approaches 1/alpha.
    Rational density_estimate(long long lo, long long hi) const;

private:
    ExactReal alpha_;
    ExactReal beta_;
    ExactReal inv_alpha_;
    bool alpha_gt_one_ = false;
};

// Value-set equality for two sequences with one common rational modulus r/s,
// both canonical: equal iff floor(s*beta1) == floor(s*beta2).
bool equal_rational(const BeattySeq& s1, const BeattySeq& s2);

}  // namespace beatty
