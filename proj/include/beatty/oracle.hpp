#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "beatty/criteria.hpp"
#include "beatty/sequence.hpp"

namespace beatty {

// Exhaustive coverage of the half-open integer window [lo, hi) by a list of
// sequences, counted through exact membership.
struct WindowReport {
    long long lo = 0;
    long long hi = 0;
    std::vector<BigInt> missing;
    std::vector<std::pair<BigInt, int>> repeated;  // value, multiplicity >= 2
    std::vector<long long> per_seq_counts;

    bool clean() const { return missing.empty() && repeated.empty(); }
};

// Requires lo < hi and every modulus > 1 (each sequence then covers a window
// integer at most once).
WindowReport window_report(const std::vector<BeattySeq>& seqs, long long lo, long long hi);

bool verify_partition(const std::vector<BeattySeq>& seqs, long long lo, long long hi);

// Partition if the window is clean; the exceptional verdict is recognized
// strictly: exactly one integer n0 covered twice and n0 - 1 the only missing
// integer.  Anything else is NotEventualPartition with witnesses.
PartitionVerdict verify_eventual(const BeattySeq& s1, const BeattySeq& s2,
                                 long long lo, long long hi);

// Sorted intersection of the two value sets restricted to [lo, hi).
std::vector<BigInt> disjoint_window(const BeattySeq& s1, const BeattySeq& s2,
                                    long long lo, long long hi);

// Brute-force decision of modulus coprimality for positive rationals
// p1/q1, p2/q2: true iff every offset pair on the grid {i/(2*q1*q2)},
// restricted to canonical ranges, intersects within one full period.
// Membership of S(p/q, beta) in k is periodic with period p (shift the index
// by q), so the joint pattern repeats every lcm(p1,p2); the window
// [0, 2*p1*p2) conservatively covers it.
bool rational_disjoint_oracle(const Rational& alpha1, const Rational& alpha2);

// First disjoint offset pair on that grid, if any (fixed grid order).
std::optional<std::pair<Rational, Rational>> rational_disjoint_witness(
    const Rational& alpha1, const Rational& alpha2);

}  // namespace beatty
