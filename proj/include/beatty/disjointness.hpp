#pragma once

#include <optional>
#include <utility>

#include "beatty/oracle.hpp"
#include "beatty/sequence.hpp"

namespace beatty {

enum class FindingKind { RationalRatio, MNWitness, Neither };

// Outcome of the necessary-condition test for disjoint sequences: either the
// moduli have rational ratio, or positive integers m, n solve
// m/alpha1 + n/alpha2 = 1 with m*beta1/alpha1 + n*beta2/alpha2 integral.
struct DisjointnessFinding {
    FindingKind kind = FindingKind::Neither;
    std::optional<BigInt> m;
    std::optional<BigInt> n;
};

const char* to_string(FindingKind k);

// gcd(n, m) == 1; equivalently every offset pair of the integer-modulus
// sequences S(n, .), S(m, .) intersects.
bool crt_coprime(const BigInt& n, const BigInt& m);

// The m/n equation is a 2x2 rational linear system over the radicand
// coordinates, so it has at most one solution; no enumeration.
DisjointnessFinding skolem_necessary(const BeattySeq& s1, const BeattySeq& s2);

// Derived quantities of the rational coprimality criterion for reduced
// p1/q1, p2/q2: p = gcd(p1,p2), q = gcd(q1,q2), u_i = q_i/q (u1, u2 coprime).
struct JrtParams {
    BigInt p1, q1, p2, q2;
    BigInt p, q, u1, u2;
    BigInt rhs;  // p - 2*u1*u2*(q-1)
};
JrtParams jrt_params(const Rational& alpha1, const Rational& alpha2);

struct JrtResult {
    bool coprime = true;
    std::optional<std::pair<BigInt, BigInt>> witness;  // (k, l) solving the equation
};
// Coprime unless positive integers k, l satisfy k*u1 + l*u2 = rhs; a negative
// rhs short-circuits to coprime.
JrtResult jrt_coprime(const Rational& alpha1, const Rational& alpha2);

// For irrational gamma and coprime r, s: offsets making S(r*gamma, .) and
// S(s*gamma, .) disjoint exist iff gamma > 2, decided exactly.
bool gamma_disjoint_exists(const ExactReal& gamma, long long r, long long s);

// Witness offsets for gamma > 2: beta1 = 0 pins the first athlete's passages
// at multiples of r*gamma; beta2 = gamma/2 centres the relative lattice
// (spacing 1/s) midway between consecutive points around O, at offset 1/(2s).
// The pair is window-verified before being returned.
std::pair<ExactReal, ExactReal> gamma_witness(const ExactReal& gamma, long long r, long long s);

// (1 - fr(t))/alpha2 <= rho < 1 - fr(t)/alpha2: the second athlete, at
// distance rho before O, does not pass O within [floor(t), floor(t)+1).
bool lattice_condition(const ExactReal& t, const ExactReal& rho, const ExactReal& alpha2);

// Corroboration for gamma < 2: sample `samples` relative offsets uniformly
// (beta1 = 0, beta2 = alpha2 * i/samples) and report whether every sampled
// pair intersects inside [lo, hi).  Sampling cannot prove the nonexistence of
// a witness; the criterion does.
bool offsets_all_intersect(const ExactReal& gamma, long long r, long long s,
                           long long samples, long long lo, long long hi);

// Full coprimality decision for a pair of positive exact reals, dispatching
// between the integer, rational, rational-ratio and irrational-ratio cases.
struct CoprimeDecision {
    bool coprime = true;
    const char* method = "";
    std::optional<std::pair<BigInt, BigInt>> jrt_witness;
    std::optional<std::pair<BigInt, BigInt>> mn_witness;
    std::optional<ExactReal> gamma;
};
CoprimeDecision decide_coprime(const ExactReal& alpha1, const ExactReal& alpha2);

}  // namespace beatty
