#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsgn {

// File- or data-level failure: malformed input, unknown identifiers, blown
// enumeration budgets. Parameter misuse throws std::invalid_argument instead.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& message)
        : DataError("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace hsgn
