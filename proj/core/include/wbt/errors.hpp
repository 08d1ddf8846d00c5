#pragma once

#include <stdexcept>
#include <string>

namespace wbt {

/// Violated precondition on caller-supplied arguments.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of a function (e.g. evaluating a weight off its interval).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A table or prime list does not cover the requested range.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Work or memory would exceed a configured budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

template <class E>
inline void require(bool cond, const std::string& what)
{
    if (!cond)
        throw E(what);
}

} // namespace detail

} // namespace wbt
