#pragma once

#include <stdexcept>
#include <string>

namespace netlap {

// Bad caller input: malformed graph JSON, out-of-range vertex, infeasible
// generator parameters. CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A combinatorial enumeration was asked to run past its configured size cap.
// Refusal, not truncation: a partial forest sum would be a wrong answer.
// CLI maps this to exit code 3.
class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (eigensolver non-convergence, inexact division where an
// exact one was required).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace netlap
