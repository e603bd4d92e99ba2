#pragma once

#include <random>
#include <utility>

#include "beatty/exact_real.hpp"
#include "beatty/sequence.hpp"

namespace beatty::testsupport {

inline constexpr long long kSquarefree[] = {2,  3,  5,  6,  7,  10, 11, 13, 14,
                                            15, 17, 19, 21, 22, 23, 26, 29, 30};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long long uniform(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng_);
    }

    Rational rational(long long max_abs_num, long long max_den) {
        return Rational(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
    }

    Rational positive_rational(long long max_num, long long max_den) {
        return Rational(uniform(1, max_num), uniform(1, max_den));
    }

    long long radicand() {
        return kSquarefree[static_cast<std::size_t>(uniform(0, std::size(kSquarefree) - 1))];
    }

    // Quadratic value with b != 0.
    ExactReal quadratic(long long max_num = 40, long long max_den = 12) {
        Rational b;
        do {
            b = rational(max_num, max_den);
        } while (b.is_zero());
        return ExactReal::quadratic(rational(max_num, max_den), b, radicand());
    }

    ExactReal positive_quadratic(long long max_num = 40, long long max_den = 12) {
        for (;;) {
            ExactReal x = quadratic(max_num, max_den);
            if (x.sign() > 0) return x;
        }
    }

    // Complementary irrational moduli via alpha1 = 1+w, alpha2 = 1+1/w.
    std::pair<ExactReal, ExactReal> complementary_pair(long long max_num = 20,
                                                       long long max_den = 8) {
        ExactReal w = positive_quadratic(max_num, max_den);
        return {ExactReal(1) + w, ExactReal(1) + w.reciprocal()};
    }

    // Random offset in [0, alpha): a rational fraction of alpha, or a small
    // rational when alpha > 1.
    ExactReal canonical_beta(const ExactReal& alpha) {
        if (uniform(0, 1) == 0) {
            Rational t(uniform(0, 999), 1000);
            return alpha * ExactReal(t);
        }
        Rational u(uniform(0, 999), 1000);
        ExactReal beta{u};
        if (ExactReal::compare(beta, alpha) == std::strong_ordering::less) return beta;
        return alpha * ExactReal(u);
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

}  // namespace beatty::testsupport
