#include "beatty/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace beatty {

WindowReport window_report(const std::vector<BeattySeq>& seqs, long long lo, long long hi) {
    if (lo >= hi) throw InvalidRange("window_report: lo >= hi");
    for (const auto& s : seqs) {
        if (ExactReal::compare(s.alpha(), ExactReal(1)) != std::strong_ordering::greater)
            throw BadModuli("window_report requires every alpha > 1");
    }
    WindowReport rep;
    rep.lo = lo;
    rep.hi = hi;
    rep.per_seq_counts.assign(seqs.size(), 0);
    for (long long k = lo; k < hi; ++k) {
        BigInt kk(k);
        int coverage = 0;
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            if (seqs[i].contains(kk)) {
                ++coverage;
                ++rep.per_seq_counts[i];
            }
        }
        if (coverage == 0) rep.missing.emplace_back(k);
        if (coverage >= 2) rep.repeated.emplace_back(BigInt(k), coverage);
    }
    return rep;
}

bool verify_partition(const std::vector<BeattySeq>& seqs, long long lo, long long hi) {
    return window_report(seqs, lo, hi).clean();
}

PartitionVerdict verify_eventual(const BeattySeq& s1, const BeattySeq& s2,
                                 long long lo, long long hi) {
    WindowReport rep = window_report({s1, s2}, lo, hi);
    if (rep.clean()) return PartitionVerdict::partition();
    if (rep.repeated.size() == 1 && rep.repeated[0].second == 2 && rep.missing.size() == 1 &&
        rep.missing[0] == rep.repeated[0].first - 1) {
        return PartitionVerdict::with_exception(rep.repeated[0].first);
    }
    std::vector<BigInt> repeated;
    for (auto& [k, m] : rep.repeated) repeated.push_back(k);
    return PartitionVerdict::not_eventual(std::move(repeated), std::move(rep.missing));
}

std::vector<BigInt> disjoint_window(const BeattySeq& s1, const BeattySeq& s2,
                                    long long lo, long long hi) {
    if (lo >= hi) throw InvalidRange("disjoint_window: lo >= hi");
    // Walk the first sequence's values inside the window (one integer index
    // interval) and test each in the second.
    BigInt n_lo = ((ExactReal(BigInt(lo)) - s1.beta()) * s1.inv_alpha()).ceil();
    BigInt n_hi = ((ExactReal(BigInt(hi)) - s1.beta()) * s1.inv_alpha()).ceil();
    std::vector<BigInt> out;
    BigInt prev;
    bool have_prev = false;
    for (BigInt n = n_lo; n < n_hi; ++n) {
        BigInt v = s1.term(n);
        if (have_prev && v == prev) continue;  // duplicate values when alpha <= 1
        prev = v;
        have_prev = true;
        if (s2.contains(v)) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Exact int64 membership of k in S(p/q, u/v); all quantities stay far below
// overflow at the desk scales of the rational oracle (|values| <= a few
// hundred, q, v <= a few hundred).
struct SmallRatSeq {
    long long p, q;  // modulus p/q > 0
    long long u, v;  // offset u/v

    static long long ceil_div(long long a, long long b) {
        long long t = a / b;
        if (a % b != 0 && a > 0) ++t;
        return t;
    }

    bool member(long long k) const {
        // n*p/q + u/v in [k, k+1)  <=>  n*p*v in [k*q*v - u*q, (k+1)*q*v - u*q)
        long long A = k * q * v - u * q;
        long long n = ceil_div(A, p * v);
        return n * p * v < A + q * v;
    }
};

struct MaskSet {
    std::vector<std::vector<std::uint64_t>> masks;
    std::size_t words = 0;

    void build(long long p, long long q, long long grid_den, long long count, long long window) {
        words = static_cast<std::size_t>((window + 63) / 64);
        masks.assign(static_cast<std::size_t>(count), {});
        for (long long i = 0; i < count; ++i) {
            SmallRatSeq seq{p, q, i, grid_den};
            auto& m = masks[static_cast<std::size_t>(i)];
            m.assign(words, 0);
            for (long long k = 0; k < window; ++k) {
                if (seq.member(k))
                    m[static_cast<std::size_t>(k >> 6)] |= std::uint64_t(1) << (k & 63);
            }
        }
    }
};

bool intersects(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t w = 0; w < a.size(); ++w) {
        if (a[w] & b[w]) return true;
    }
    return false;
}

}  // namespace

std::optional<std::pair<Rational, Rational>> rational_disjoint_witness(const Rational& alpha1,
                                                                       const Rational& alpha2) {
    if (!alpha1.is_positive() || !alpha2.is_positive())
        throw NonPositive("rational oracle: moduli must be positive");
    // Exhaustive grid times full period: desk scale only.
    if (alpha1.num() * alpha2.num() > 1000000 || alpha1.den() * alpha2.den() > 1000000)
        throw InvalidRange("rational oracle: moduli too large for exhaustive search");
    long long p1 = static_cast<long long>(alpha1.num());
    long long q1 = static_cast<long long>(alpha1.den());
    long long p2 = static_cast<long long>(alpha2.num());
    long long q2 = static_cast<long long>(alpha2.den());

    const long long grid_den = 2 * q1 * q2;
    // Canonical range [0, p/q) holds exactly 2*p*q_other grid points.
    const long long n1 = 2 * p1 * q2;
    const long long n2 = 2 * p2 * q1;
    const long long window = 2 * p1 * p2;

    MaskSet m1, m2;
    m1.build(p1, q1, grid_den, n1, window);
    m2.build(p2, q2, grid_den, n2, window);

    for (long long i1 = 0; i1 < n1; ++i1) {
        for (long long i2 = 0; i2 < n2; ++i2) {
            if (!intersects(m1.masks[static_cast<std::size_t>(i1)],
                            m2.masks[static_cast<std::size_t>(i2)])) {
                return std::make_pair(Rational(i1, grid_den), Rational(i2, grid_den));
            }
        }
    }
    return std::nullopt;
}

bool rational_disjoint_oracle(const Rational& alpha1, const Rational& alpha2) {
    return !rational_disjoint_witness(alpha1, alpha2).has_value();
}

}  // namespace beatty
