#pragma once

#include <optional>
#include <vector>

#include "beatty/sequence.hpp"

namespace beatty {

enum class VerdictKind {
    Partition,
    EventualPartitionWithException,
    NotEventualPartition,
};

// Classification of a sequence pair.  An exceptional verdict carries the one
// repeated integer n0; the implied missing integer is n0 - 1.  Witness lists
// are filled by window verification, not by the analytic criteria.
struct PartitionVerdict {
    VerdictKind kind = VerdictKind::Partition;
    std::optional<BigInt> exception;  // n0
    std::vector<BigInt> repeated;
    std::vector<BigInt> missing;

    static PartitionVerdict partition() { return {}; }
    static PartitionVerdict with_exception(BigInt n0);
    static PartitionVerdict not_eventual(std::vector<BigInt> repeated = {},
                                         std::vector<BigInt> missing = {});

    bool same_classification(const PartitionVerdict& o) const {
        return kind == o.kind && exception == o.exception;
    }
};

const char* to_string(VerdictKind k);

// 1/alpha1 + 1/alpha2 == 1, exactly.
bool complementary(const ExactReal& alpha1, const ExactReal& alpha2);

// beta1/alpha1 + beta2/alpha2 integral, for complementary irrational moduli.
bool skolem_condition(const BeattySeq& s1, const BeattySeq& s2);

// Full classification under complementary irrational moduli.  Offsets are
// normalized internally; the classification is invariant under that shift.
// The exceptional integer is found by solving beta1 + k*alpha1 in Z over the
// radicand coordinates (at most one solution).
PartitionVerdict skolem_classify(const BeattySeq& s1, const BeattySeq& s2);

// floor(s*beta1) + floor((r-s)*beta2) == r-1 (mod r); decides whether
// S(r/s, beta1) and S(r/(r-s), beta2) partition Z.
bool fraenkel_condition(long long r, long long s, const ExactReal& beta1,
                        const ExactReal& beta2);

// Athlete coordinates at integer time k, measured from O against the first
// athlete's running direction.  x lives in [0,1), y in (0,1] (the wrap point
// belongs to the top interval ((r-1)/r, 1]).  j is the unique interval index
// with x in [j/r,(j+1)/r) when additionally y in (j/r,(j+1)/r], else absent.
struct LemmaPositions {
    ExactReal x;
    ExactReal y;
    std::optional<long long> j;
};
LemmaPositions lemma_positions(long long r, long long s, const ExactReal& beta1,
                               const ExactReal& beta2, long long k);

// Offsets moved to a common starting point, value sets unchanged:
// beta1' = (floor(s*beta1)+nu)/s, beta2' = (floor((r-s)*beta2)+1-nu)/(r-s).
std::pair<ExactReal, ExactReal> relocate_common_start(long long r, long long s,
                                                      const ExactReal& beta1,
                                                      const ExactReal& beta2,
                                                      const ExactReal& nu);

}  // namespace beatty
