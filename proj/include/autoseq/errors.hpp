#pragma once

#include <stdexcept>
#include <string>

namespace autoseq {

// Input text that cannot be parsed; carries a 1-based line number when known.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg, long line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : msg),
        line_(line) {}

  long line() const { return line_; }

private:
  long line_;
};

// A well-formed object that violates a documented precondition or invariant.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An internal consistency failure; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace autoseq
