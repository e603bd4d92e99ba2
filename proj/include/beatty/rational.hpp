#pragma once

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "beatty/errors.hpp"

namespace beatty {

using BigInt = boost::multiprecision::cpp_int;

// Quotient rounded toward -inf; requires b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);

// Largest s with s*s <= n; requires n >= 0.
BigInt isqrt(const BigInt& n);

BigInt gcd(const BigInt& a, const BigInt& b);

// Arbitrary-precision rational, always in lowest terms with positive
// denominator.  Zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational reciprocal() const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    // Floor toward -inf, exact for all signs.
    BigInt floor() const { return floor_div(num_, den_); }
    Rational frac() const { return *this - Rational(floor()); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // "p" when integral, "p/q" otherwise.
    std::string str() const;

private:
    BigInt num_;
    BigInt den_;
};

}  // namespace beatty
