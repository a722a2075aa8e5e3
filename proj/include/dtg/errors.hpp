#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dtg {

/// Malformed input text. `line()` is 1-based, 0 when the format has no lines.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A caller violated a documented precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An internal consistency check failed. Never a valid outcome; indicates a bug
/// or an input that slipped past a precondition.
class InternalContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dtg
