#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdeg {

// Syntax error with a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  std::string diagnostic() const {
    return std::to_string(line_) + ":" + std::to_string(column_) + ": " + what();
  }

 private:
  std::size_t line_;
  std::size_t column_;
};

// No coordinate change among the attempted ones put the ideal in Noether position.
class NoetherFailure : public std::runtime_error {
 public:
  NoetherFailure(const std::string& message, std::string last_initial_ideal)
      : std::runtime_error(message), last_initial_ideal_(std::move(last_initial_ideal)) {}
  const std::string& last_initial_ideal() const { return last_initial_ideal_; }

 private:
  std::string last_initial_ideal_;
};

// A Betti table needed in full was cut off by a user-supplied degree cap.
class TruncatedTable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed-form formula called outside its hypotheses.
class FormulaParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rdeg
