#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace arguendo {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Surface-syntax error. Carries the byte offset of the first offending
/// character and the set of tokens that would have been accepted there.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset,
               std::vector<std::string> expected = {})
        : Error(message + " at offset " + std::to_string(offset)),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// A configured bound (atom count, node count, search budget, depth cap)
/// was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A well-formed input violates a semantic requirement (unknown node,
/// missing stable labelling, partial interpretation, ...).
class SemanticError : public Error {
public:
    using Error::Error;
};

}  // namespace arguendo
