#ifndef SQZ_ERRORS_HPP
#define SQZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sqz
{
// Argument violates an operation precondition (bad index, out-of-range
// parameter, malformed input). The CLI maps this to exit code 2.
class InvalidArgument : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Input is well formed but lies where the model is singular or undefined
// (zero sideband frequency, at-threshold OPO, ...). CLI exit code 3.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// A computed value left the representable range. CLI exit code 3.
class NumericRangeError : public std::range_error
{
public:
    using std::range_error::range_error;
};

namespace detail
{
inline void require(bool ok, const std::string &what)
{
    if (!ok)
        throw InvalidArgument(what);
}
} // namespace detail

} // namespace sqz

#endif // SQZ_ERRORS_HPP
