#ifndef VB1_ERRORS_HPP
#define VB1_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vb1 {

// Bad user input: malformed syntax, violated preconditions, unsupported
// combinations. CLI maps this to exit code 2.
class invalid_input : public std::runtime_error {
public:
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap was exceeded (coset limit, Groebner pair limit, ...).
// CLI maps this to exit code 3.
class resource_limit : public std::runtime_error {
public:
    explicit resource_limit(const std::string& msg) : std::runtime_error(msg) {}
};

// Two independent computations of the same quantity disagreed, or an
// internal consistency assertion failed. Always a bug. CLI exit code 4.
class crosscheck_mismatch : public std::logic_error {
public:
    explicit crosscheck_mismatch(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace vb1

#endif
