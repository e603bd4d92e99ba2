#include "beatty/exact_real.hpp"

namespace beatty {

bool is_squarefree(long long d) {
    if (d < 1) return false;
    for (long long i = 2; i * i <= d; ++i) {
        if (d % (i * i) == 0) return false;
    }
    return true;
}

ExactReal ExactReal::quadratic(Rational a, Rational b, long long d) {
    if (b.is_zero()) return ExactReal(std::move(a));
    if (d < 2 || !is_squarefree(d)) throw RadicandNotSquarefree(d);
    return ExactReal(std::move(a), std::move(b), d, unchecked{});
}

ExactReal ExactReal::make(Rational a, Rational b, long long d) {
    if (b.is_zero()) return ExactReal(std::move(a));
    return ExactReal(std::move(a), std::move(b), d, unchecked{});
}

long long ExactReal::common_radicand(const ExactReal& x, const ExactReal& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw MixedRadicands(x.d_, y.d_);
}

const Rational& ExactReal::as_rational() const {
    if (d_ != 0) throw NotRational("value " + str() + " is irrational");
    return a_;
}

// Sign of a + b*sqrt(d).  With mixed signs the comparison |a| vs |b|*sqrt(d)
// is decided by squaring both sides; a^2 = b^2*d is impossible for b != 0
// since d is squarefree >= 2.
int ExactReal::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    int sa = a_.sign(), sb = b_.sign();
    if (sa == sb) return sa;
    BigInt lhs = a_.num() * a_.num() * b_.den() * b_.den();
    BigInt rhs = b_.num() * b_.num() * a_.den() * a_.den() * d_;
    // lhs == rhs would make sqrt(d) rational
    return lhs > rhs ? sa : sb;
}

ExactReal ExactReal::operator-() const {
    return make(-a_, -b_, d_);
}

ExactReal ExactReal::operator+(const ExactReal& o) const {
    long long d = common_radicand(*this, o);
    return make(a_ + o.a_, b_ + o.b_, d);
}

ExactReal ExactReal::operator-(const ExactReal& o) const {
    long long d = common_radicand(*this, o);
    return make(a_ - o.a_, b_ - o.b_, d);
}

ExactReal ExactReal::operator*(const ExactReal& o) const {
    long long d = common_radicand(*this, o);
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) s
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational b = a_ * o.b_ + o.a_ * b_;
    return make(std::move(a), std::move(b), d);
}

ExactReal ExactReal::reciprocal() const {
    if (is_zero()) throw DivisionByZero();
    if (d_ == 0) return ExactReal(a_.reciprocal());
    // 1/(a + b s) = (a - b s)/(a^2 - b^2 d); the norm is nonzero since
    // sqrt(d) is irrational.
    Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
    return make(a_ / norm, -b_ / norm, d_);
}

ExactReal ExactReal::operator/(const ExactReal& o) const {
    return *this * o.reciprocal();
}

std::strong_ordering ExactReal::compare(const ExactReal& x, const ExactReal& y) {
    int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool ExactReal::operator==(const ExactReal& o) const {
    // Mixed radicands never compare equal and must not throw here; the
    // canonical representation makes field-wise equality exact.
    return d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
}

// floor(b*sqrt(d)) for integer b != 0, via the integer square root of b^2*d.
// b^2*d is never a perfect square, so for b < 0 the floor is -isqrt(b^2*d)-1.
static BigInt floor_int_times_sqrt(const BigInt& b, long long d) {
    BigInt s = isqrt(b * b * d);
    return b > 0 ? s : BigInt(-s - 1);
}

BigInt ExactReal::floor() const {
    if (d_ == 0) return a_.floor();
    // x = (P + R*sqrt(d))/Q with integer P, R and Q > 0.  Let M be the floor
    // of the numerator; then M <= P + R*sqrt(d) < M+1 and, since the value is
    // irrational, floor(x) = floor_div(M, Q).
    BigInt P = a_.num() * b_.den();
    BigInt R = b_.num() * a_.den();
    BigInt Q = a_.den() * b_.den();
    BigInt M = P + floor_int_times_sqrt(R, d_);
    return floor_div(M, Q);
}

std::string ExactReal::str() const {
    if (d_ == 0) return a_.str();
    std::string s;
    if (!a_.is_zero()) {
        s += a_.str();
        s += b_.is_negative() ? "-" : "+";
        s += b_.abs().str();
    } else {
        s += b_.str();
    }
    s += "*sqrt(" + std::to_string(d_) + ")";
    return s;
}

}  // namespace beatty
