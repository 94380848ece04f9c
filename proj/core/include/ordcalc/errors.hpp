#ifndef ORDCALC_ERRORS_HPP
#define ORDCALC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordcalc {

/// Syntax error from the expression parser. Carries the byte offset of the
/// offending input position and a description of what was expected there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected, std::string found)
      : std::runtime_error("syntax error at byte " + std::to_string(offset) +
                           ": expected " + expected + ", found " + found),
        offset_(offset),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t offset_;
  std::string expected_;
  std::string found_;
};

/// Raised when a Fock-space computation would be corrupted by the finite
/// truncation dimension (state support plus operator reach exceeds D).
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ordcalc

#endif
