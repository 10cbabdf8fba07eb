#pragma once

#include <stdexcept>
#include <string>

namespace rwit {

// Input text that does not decode as graph6. offset is the byte position
// within the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// An operation was called outside its stated domain (disconnected input,
// invalid matching, bad parameters, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A produced witness failed re-verification. Indicates a bug, not bad input.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rwit
