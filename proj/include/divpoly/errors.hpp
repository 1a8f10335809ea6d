#ifndef DIVPOLY_ERRORS_HPP
#define DIVPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace divpoly {

// Bad input: violated precondition on user-supplied data.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exact computation produced something that theory rules out.
// Seeing one of these means a bug in this library, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Requested n exceeds the configured per-genus cap.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace divpoly

#endif // DIVPOLY_ERRORS_HPP
