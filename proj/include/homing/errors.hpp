#ifndef HOMING_ERRORS_HPP
#define HOMING_ERRORS_HPP

#include <stdexcept>

namespace homing {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotABijection : public Error {
 public:
  using Error::Error;
};

// Deck size above the hard cap of 20.
class SizeExceeded : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DuplicateElement : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownKind : public Error {
 public:
  using Error::Error;
};

class RankOutOfRange : public Error {
 public:
  using Error::Error;
};

// Requested n is beyond the exhaustive-enumeration cap of the operation.
class NExceedsExhaustiveCap : public Error {
 public:
  using Error::Error;
};

// Iteration ran past the 2^(n-1) bound. A genuine homing rule can never
// trigger this; it signals a broken custom rule.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace homing

#endif  // HOMING_ERRORS_HPP
