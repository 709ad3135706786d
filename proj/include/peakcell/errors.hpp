#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace peakcell {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value fed into the pipeline is not a finite number.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// An operation was called with arguments outside its domain
/// (empty diagram, window larger than the series, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class UnsupportedFormat : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace peakcell
