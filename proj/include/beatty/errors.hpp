#pragma once

#include <stdexcept>
#include <string>

namespace beatty {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic on two quadratic values with different radicands is undefined
// in this kernel; it signals a computation the artifact does not support.
struct MixedRadicands : Error {
    MixedRadicands(long long d1, long long d2)
        : Error("mixed radicands: sqrt(" + std::to_string(d1) + ") vs sqrt(" +
                std::to_string(d2) + ")") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct RadicandNotSquarefree : Error {
    explicit RadicandNotSquarefree(long long d)
        : Error("radicand must be squarefree and >= 2, got " + std::to_string(d)) {}
};

struct InvalidRange : Error {
    using Error::Error;
};

struct NotRational : Error {
    using Error::Error;
};

struct NotIrrational : Error {
    using Error::Error;
};

struct AlphasDiffer : Error {
    using Error::Error;
};

struct NotComplementary : Error {
    using Error::Error;
};

struct NotCoprime : Error {
    using Error::Error;
};

struct BadModuli : Error {
    using Error::Error;
};

struct CriterionNotSatisfied : Error {
    using Error::Error;
};

struct NuOutOfRange : Error {
    using Error::Error;
};

struct NonPositive : Error {
    using Error::Error;
};

struct NoWitness : Error {
    using Error::Error;
};

struct VerificationFailed : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace beatty
