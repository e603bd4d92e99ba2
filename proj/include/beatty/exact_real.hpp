#pragma once

#include <compare>
#include <string>

#include "beatty/rational.hpp"

namespace beatty {

bool is_squarefree(long long d);

// Element of Q or of a real quadratic field Q(sqrt(d)): value a + b*sqrt(d)
// with rational a, b and squarefree d >= 2.  A value with b = 0 is stored in
// rational form (d = 0), so the representation is canonical and `kind` is
// derivable.  All operations are exact; floor and comparison are decided by
// integer squaring with sign analysis, never by approximation.
//
// Values with different radicands cannot be combined; such a combination
// throws MixedRadicands (a rational operand is compatible with any radicand).
class ExactReal {
public:
    ExactReal() = default;  // zero
    ExactReal(long long n) : a_(n) {}
    ExactReal(BigInt n) : a_(std::move(n)) {}
    ExactReal(Rational r) : a_(std::move(r)) {}

    // a + b*sqrt(d); validates the radicand, collapses b = 0 to rational kind.
    static ExactReal quadratic(Rational a, Rational b, long long d);
    static ExactReal sqrt_of(long long d) { return quadratic(Rational(0), Rational(1), d); }

    bool is_rational() const { return d_ == 0; }
    bool is_quadratic() const { return d_ != 0; }
    bool is_integer() const { return d_ == 0 && a_.is_integer(); }
    bool is_irrational() const { return d_ != 0; }
    bool is_zero() const { return d_ == 0 && a_.is_zero(); }

    const Rational& rat_part() const { return a_; }
    const Rational& sqrt_coeff() const { return b_; }
    long long radicand() const { return d_; }

    // Throws NotRational for quadratic values.
    const Rational& as_rational() const;

    int sign() const;

    ExactReal operator-() const;
    ExactReal operator+(const ExactReal& o) const;
    ExactReal operator-(const ExactReal& o) const;
    ExactReal operator*(const ExactReal& o) const;
    ExactReal operator/(const ExactReal& o) const;
    ExactReal reciprocal() const;

    static std::strong_ordering compare(const ExactReal& x, const ExactReal& y);
    bool operator==(const ExactReal& o) const;
    std::strong_ordering operator<=>(const ExactReal& o) const {
        return compare(*this, o);
    }

    // Unique f with f <= x < f+1 (toward -inf, all signs).
    BigInt floor() const;
    BigInt ceil() const { return -((-*this).floor()); }
    // x - floor(x), in [0, 1).
    ExactReal frac() const { return *this - ExactReal(BigInt(floor())); }

    // Literal form: "p/q", "p/q+p/q*sqrt(d)", "-1*sqrt(2)", ...
    std::string str() const;

private:
    struct unchecked {};
    ExactReal(Rational a, Rational b, long long d, unchecked)
        : a_(std::move(a)), b_(std::move(b)), d_(d) {}

    static ExactReal make(Rational a, Rational b, long long d);
    // Radicand shared by x and y, or throws MixedRadicands.
    static long long common_radicand(const ExactReal& x, const ExactReal& y);

    Rational a_;
    Rational b_;       // zero iff rational kind
    long long d_ = 0;  // 0 for rational kind, squarefree >= 2 otherwise
};

}  // namespace beatty
