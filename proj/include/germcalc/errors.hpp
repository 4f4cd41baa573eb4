#ifndef GERMCALC_ERRORS_HPP
#define GERMCALC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germcalc {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in different rings (or a map was applied to the wrong ring).
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

/// An exponent left the representable range. Exponents are capped at 2^16-1;
/// exceeding the cap is always an error, never a silent wraparound.
class ExponentOverflowError : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed; position() is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A cooperative compute budget expired mid-run.
class TimeoutError : public Error {
 public:
  using Error::Error;
};

}  // namespace germcalc

#endif
