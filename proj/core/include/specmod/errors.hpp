#ifndef SPECMOD_ERRORS_HPP
#define SPECMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specmod {

/// Numeric infeasibility: truncation order too small for the requested
/// tolerance, bisection failed to converge, signature obstruction.
/// Distinct from std::domain_error (invalid/degenerate inputs) so that
/// callers can map the two classes to different exit codes.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace specmod

#endif
