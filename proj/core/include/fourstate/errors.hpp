#pragma once

#include <stdexcept>
#include <string>

namespace fourstate {

// Base for all exact-arithmetic / certificate failures.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct NonSquare : MathError {
    explicit NonSquare(const std::string& what = "matrix is not square") : MathError(what) {}
};
struct SingularMatrix : MathError {
    explicit SingularMatrix(const std::string& what = "singular matrix") : MathError(what) {}
};
struct DimensionMismatch : MathError {
    explicit DimensionMismatch(const std::string& what = "dimension mismatch") : MathError(what) {}
};

struct DegreeZero : MathError {
    explicit DegreeZero(const std::string& what = "cannot differentiate a degree-0 polynomial")
        : MathError(what) {}
};
struct BothZero : MathError {
    explicit BothZero(const std::string& what = "gcd of two zero polynomials") : MathError(what) {}
};
struct DegreeTooLow : MathError {
    explicit DegreeTooLow(const std::string& what = "resultant needs degree >= 1") : MathError(what) {}
};
struct DegreeTooHigh : MathError {
    explicit DegreeTooHigh(const std::string& what = "polynomial degree exceeds operator order")
        : MathError(what) {}
};

struct PreconditionUnverified : MathError {
    explicit PreconditionUnverified(const std::string& what = "constant-rank certificate not established")
        : MathError(what) {}
};
struct DependentBasis : MathError {
    explicit DependentBasis(const std::string& what = "basis symbol values are linearly dependent")
        : MathError(what) {}
};

struct SingularSystem : MathError {
    explicit SingularSystem(const std::string& what = "staircase system is singular") : MathError(what) {}
};
struct SingularInterpolation : MathError {
    explicit SingularInterpolation(const std::string& what = "interpolation matrix is singular")
        : MathError(what) {}
};
struct SingularDependency : MathError {
    explicit SingularDependency(const std::string& what = "dependency matrix is singular")
        : MathError(what) {}
};

struct NotAWaveDirection : MathError {
    explicit NotAWaveDirection(const std::string& what = "direction is not a symbol witness for b-a")
        : MathError(what) {}
};
struct IllegalSplit : MathError {
    explicit IllegalSplit(const std::string& what = "illegal elementary splitting") : MathError(what) {}
};
struct UnknownLeaf : MathError {
    explicit UnknownLeaf(const std::string& what = "value is not a leaf of the tree") : MathError(what) {}
};
struct InfeasibleFractions : MathError {
    explicit InfeasibleFractions(const std::string& what = "fraction rebalancing is infeasible")
        : MathError(what) {}
};

} // namespace fourstate
