#pragma once

#include <stdexcept>
#include <string>

namespace mahler {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (polynomials, constants, rational maps).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (zero polynomial height,
/// non-member of the resultant monoid, division by an interval containing 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A certified answer would need more bits than the configured cap allows.
/// Raised instead of ever returning an uncertified result.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace mahler
