#ifndef CONDLAB_ERRORS_HPP
#define CONDLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace condlab {

struct NotPositiveDefinite : std::runtime_error {
    int pivot;
    explicit NotPositiveDefinite(int pivot_index)
        : std::runtime_error("matrix not positive definite at pivot " + std::to_string(pivot_index)),
          pivot(pivot_index) {}
};

struct NoConvergence : std::runtime_error {
    int iterations;
    explicit NoConvergence(int iters)
        : std::runtime_error("eigensolver did not converge within " + std::to_string(iters) + " sweeps"),
          iterations(iters) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error("dimension mismatch: " + what) {}
};

struct InvalidExponent : std::runtime_error {
    explicit InvalidExponent(double lambda)
        : std::runtime_error("weight exponent out of range (-1,1): " + std::to_string(lambda)) {}
};

struct InvalidParameter : std::runtime_error {
    explicit InvalidParameter(const std::string& what) : std::runtime_error("invalid parameter: " + what) {}
};

struct UnsupportedPair : std::runtime_error {
    explicit UnsupportedPair(const std::string& what) : std::runtime_error("unsupported space pair: " + what) {}
};

struct IncompatibleOracles : std::runtime_error {
    explicit IncompatibleOracles(const std::string& what) : std::runtime_error("incompatible norm oracles: " + what) {}
};

struct OddDimension : std::runtime_error {
    OddDimension() : std::runtime_error("rotation requires even dimension") {}
};

struct BlockOverrun : std::runtime_error {
    explicit BlockOverrun(const std::string& what) : std::runtime_error("block overrun: " + what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what)
        : std::runtime_error("enumeration budget exceeded (" + what + "); switch to heuristic mode") {}
};

struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what) : std::runtime_error("insufficient data: " + what) {}
};

}  // namespace condlab

#endif
