#ifndef SELCOL_ERROR_HPP
#define SELCOL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace selcol {

// Input exceeds a deliberate size guard (brute-force oracles, enumeration).
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical routine failed to deliver its contract (simplex stall,
// SDP non-convergence, perfectness violation during coloring).
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Theta landed too far from an integer to round safely.
class AccuracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// PerfectGen exhausted its restart budget.
class GenerationError : public std::runtime_error {
public:
    GenerationError(const std::string& msg, double closest_density)
        : std::runtime_error(msg), closest_density(closest_density) {}
    double closest_density;
};

// Instance file rejected; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

} // namespace selcol

#endif
