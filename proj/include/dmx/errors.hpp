#pragma once

#include <stdexcept>
#include <string>

namespace dmx {

// Argument outside an operation's contract (bad label, overlapping minor sets, size caps).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A set system with an empty feasible family where a proper one is required.
class ImproperSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input text, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace dmx
