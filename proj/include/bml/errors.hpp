#ifndef BML_ERRORS_HPP
#define BML_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bml {

// Root of the library error hierarchy. The CLI maps ConfigError to exit
// code 2 and NumericError to exit code 3.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Invalid configuration, presets, or rule definitions.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A transition rule that cannot produce a target for some (level, claims).
class MalformedRuleError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// Numerical failure during evaluation.
class NumericError : public Error {
public:
    using Error::Error;
};

// Requested tolerance could not be reached; carries the best estimate.
class ToleranceError : public NumericError {
public:
    ToleranceError(const std::string& what_arg, double achieved_estimate)
        : NumericError(what_arg), achieved_(achieved_estimate) {}
    double achieved_estimate() const { return achieved_; }

private:
    double achieved_;
};

// Chain has no unique stationary distribution.
class SingularChainError : public NumericError {
public:
    using NumericError::NumericError;
};

// Level mass underflows; the level cannot be conditioned on.
class UnreachableLevelError : public NumericError {
public:
    using NumericError::NumericError;
};

// Var(L) = 0 or similar degenerate weighting.
class DegenerateDistributionError : public NumericError {
public:
    using NumericError::NumericError;
};

// Argument outside an operation's domain (mu <= 0, M <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Exact enumeration asked for a size it is not meant to handle.
class OracleScaleError : public DomainError {
public:
    using DomainError::DomainError;
};

// Value outside the supported exact-arithmetic range.
class RangeError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace bml

#endif  // BML_ERRORS_HPP
