#pragma once

#include <stdexcept>
#include <string>

namespace kpg {

// Base for every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// A parameter falls outside an operation's domain (n < p+2, m < 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class NotGraphical : public Error {
public:
    explicit NotGraphical(const std::string& seq)
        : Error("sequence is not graphical: " + seq) {}
};

class BelowThreshold : public Error {
public:
    using Error::Error;
};

class KnownException : public Error {
public:
    using Error::Error;
};

class TooSmall : public Error {
public:
    using Error::Error;
};

class InvalidInterchange : public Error {
public:
    using Error::Error;
};

class AttachmentInfeasible : public Error {
public:
    using Error::Error;
};

} // namespace kpg
