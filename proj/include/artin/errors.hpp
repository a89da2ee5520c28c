#pragma once

#include <stdexcept>
#include <string>

namespace artin {

/// Malformed graph or diagram input. `line` is 0 when not tied to a text line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An operation was asked to answer outside the hypotheses it is valid under.
class ScopeError : public std::logic_error {
 public:
  explicit ScopeError(const std::string& hypothesis)
      : std::logic_error("out of scope: " + hypothesis), hypothesis_(hypothesis) {}
  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// A search or construction refused to run past its size budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace artin
