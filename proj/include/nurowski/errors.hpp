#pragma once

#include <stdexcept>
#include <string>

namespace nurowski {

// Evaluation outside the mathematical domain (singular point, pole, branch).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Trajectory left the admissible region (blow-up or w_i collision).
struct SingularityError : std::runtime_error {
    double x;
    SingularityError(const std::string& what, double where)
        : std::runtime_error(what + " at x=" + std::to_string(where)), x(where) {}
};

struct DegeneracyError : std::runtime_error {
    double x;
    DegeneracyError(const std::string& what, double where)
        : std::runtime_error(what + " at x=" + std::to_string(where)), x(where) {}
};

// (combination, abg) pair not among the tabulated parameter patterns.
struct UnsupportedCaseError : std::runtime_error {
    explicit UnsupportedCaseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nurowski
