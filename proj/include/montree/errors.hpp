#pragma once

#include <stdexcept>
#include <string>

namespace montree {

// Bad user input: malformed files, invalid parameters, contract violations.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Input exists but cannot be read (missing file, unreadable stream).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A configured budget (embedding cap, node cap) was exceeded.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A computation violated one of its own consistency checks. Always a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace montree
