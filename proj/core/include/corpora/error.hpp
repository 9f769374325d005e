#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace corpora {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid UTF-8 input; carries the byte offset of the offending sequence.
class DecodeError : public Error {
public:
    DecodeError(const std::string& msg, std::size_t byte_offset)
        : Error(msg + " at byte offset " + std::to_string(byte_offset)),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

/// Malformed text artifact (model file, hypothesis file, manifest line, ...).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    explicit ParseError(const std::string& msg) : Error(msg), line_(0) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Filesystem-level failure: unreadable file, missing path, short read.
class IoError : public Error {
public:
    using Error::Error;
};

/// A metric was requested on input for which it is undefined
/// (e.g. WER with an empty reference).
class MetricError : public Error {
public:
    using Error::Error;
};

/// Structurally invalid input: empty corpus, length mismatch, dangling id,
/// violated precondition.
class InputError : public Error {
public:
    using Error::Error;
};

/// Bad configuration value or malformed config file.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace corpora
