#ifndef SUMDIFF_ERRORS_HPP
#define SUMDIFF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sumdiff {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position()` is a byte offset for graph6 and a
/// 1-based line number for line-oriented formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnsupportedSizeError : public Error {
 public:
  using Error::Error;
};

}  // namespace sumdiff

#endif  // SUMDIFF_ERRORS_HPP
