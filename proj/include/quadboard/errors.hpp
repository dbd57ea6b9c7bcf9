#pragma once

#include <stdexcept>
#include <string>

namespace quadboard {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller passed an argument outside the operation's precondition (zero generator, P < 1, ...).
class invalid_parameter : public error {
public:
    using error::error;
};

/// The mathematical object is undefined at the requested point (light cone, t = 0, |v| >= 1, ...).
class domain_error : public error {
public:
    using error::error;
};

/// Exhaustive enumeration would exceed its configured cap.
class resource_limit : public error {
public:
    resource_limit(const std::string& what, unsigned cap) : error(what), cap_(cap) {}
    unsigned cap() const noexcept { return cap_; }

private:
    unsigned cap_;
};

} // namespace quadboard
