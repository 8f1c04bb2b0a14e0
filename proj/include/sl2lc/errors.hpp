#pragma once

#include <stdexcept>
#include <string>

namespace sl2lc {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by an (exact) zero value.
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

/// A result or decision needs more p-adic digits than the operands carry.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what = "p-adic precision exhausted") : Error(what) {}
};

/// Multiplicative character evaluated off the unit group.
struct NotAUnit : Error {
    explicit NotAUnit(const std::string& what = "argument is not a unit") : Error(what) {}
};

struct NotInSubgroup : Error {
    explicit NotInSubgroup(const std::string& what = "element is not in the required subgroup") : Error(what) {}
};

struct NotInK : Error {
    explicit NotInK(const std::string& what = "element is not integral") : Error(what) {}
};

/// Values from two different cyclotomic/field contexts were mixed.
struct IncompatibleContext : Error {
    explicit IncompatibleContext(const std::string& what = "values belong to different contexts") : Error(what) {}
};

/// A principal-value integral changed when the integration range grew.
struct UnstablePrincipalValue : Error {
    explicit UnstablePrincipalValue(const std::string& what = "principal value not stable in depth") : Error(what) {}
};

/// A convolution or module action did not close in the two-dimensional span.
struct BasisResolutionFailure : Error {
    explicit BasisResolutionFailure(const std::string& what = "result does not lie in the basis span") : Error(what) {}
};

/// The summed local coefficient disagreed with its closed form.
struct MismatchWithClosedForm : Error {
    explicit MismatchWithClosedForm(const std::string& what = "computed value disagrees with closed form") : Error(what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

} // namespace sl2lc
