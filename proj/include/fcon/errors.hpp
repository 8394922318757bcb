#pragma once

#include <stdexcept>
#include <string>

namespace fcon {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NegativeInput : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotSquare : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPSD : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotContraction : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotInDisk : std::domain_error {
    using std::domain_error::domain_error;
};

struct ZeroDenominator : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotEpi : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotMono : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotCocone : std::invalid_argument {
    NotCocone(const std::string& what, std::size_t index)
        : std::invalid_argument(what), failingIndex(index) {}
    std::size_t failingIndex;
};

struct NotNatural : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotMonotone : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotBounded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoLimitWithinBudget : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoWitnessWithinBudget : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotOrthonormalSystem : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IncomparableEncountered : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConeViolation : std::domain_error {
    using std::domain_error::domain_error;
};

struct SelfAdjointInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fcon
