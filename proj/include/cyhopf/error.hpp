#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cyhopf {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation would leave the signed monomial group
/// (fractional powers of -1, checked-integer overflow, ...).
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Raised for malformed Cartan matrices and unreduced words.
class CartanError : public Error {
 public:
  using Error::Error;
};

/// Raised by operations whose contract excludes the given input size.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Raised by the text parsers; carries the 1-based line and the key.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string key, const std::string& what)
      : Error("line " + std::to_string(line) + (key.empty() ? "" : " (" + key + ")") +
              ": " + what),
        line_(line),
        key_(std::move(key)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& key() const noexcept { return key_; }

 private:
  std::size_t line_;
  std::string key_;
};

/// Raised by datum validation; carries every violated condition.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
      if (!out.empty()) out += "; ";
      out += s;
    }
    return out;
  }
  std::vector<std::string> violations_;
};

}  // namespace cyhopf
