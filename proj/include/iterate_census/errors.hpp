#pragma once

#include <stdexcept>
#include <string>

namespace iterate_census {

/// Caller passed an argument outside an operation's domain.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size cap (enumeration, brute force, closed form) would be exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent evaluation routes disagreed. Never expected; indicates a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw ArgumentError(what);
}

inline void require_cap(long long value, long long cap, const std::string& what) {
    if (value > cap) {
        throw ResourceLimitError(what + " " + std::to_string(value) + " exceeds cap " +
                                 std::to_string(cap));
    }
}

}  // namespace detail
}  // namespace iterate_census
