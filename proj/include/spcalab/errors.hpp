#ifndef SPCALAB_ERRORS_HPP
#define SPCALAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spcalab {

// Subset enumeration would exceed the configured guard. The brute-force
// oracles are desk-scale tools; the guard makes that boundary explicit.
class EnumerationGuardError : public std::runtime_error {
public:
    explicit EnumerationGuardError(const std::string& what) : std::runtime_error(what) {}
};

// Eigensolver failed to reach the requested tolerance within its iteration
// budget from any of its deterministic start vectors.
class NonConvergenceError : public std::runtime_error {
public:
    explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Rejection sampling exhausted its retry budget; the requested parameters are
// infeasible (or extremely unlikely) at this instance size.
class GenerationRetryError : public std::runtime_error {
public:
    explicit GenerationRetryError(const std::string& what) : std::runtime_error(what) {}
};

enum class EdgeListErrorKind {
    malformed_line,
    vertex_out_of_range,
    self_loop,
    duplicate_edge,
};

class EdgeListParseError : public std::runtime_error {
public:
    EdgeListParseError(EdgeListErrorKind kind, int line, const std::string& what)
        : std::runtime_error(what), kind_(kind), line_(line) {}

    EdgeListErrorKind kind() const { return kind_; }
    int line() const { return line_; }

private:
    EdgeListErrorKind kind_;
    int line_;
};

}  // namespace spcalab

#endif  // SPCALAB_ERRORS_HPP
