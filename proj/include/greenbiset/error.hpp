#pragma once

#include <stdexcept>
#include <string>

namespace gb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown catalog token, bad word syntax, wrong dimensions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A group (or intermediate product) would exceed the configured size bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Arithmetic between scalars of different fields, or an operation the field
/// does not support (inverting zero, trace-form radical in characteristic q).
class FieldError : public Error {
 public:
  using Error::Error;
};

/// An operation was applied outside its mathematical domain: Def along a
/// non-normal subgroup, a constant functor evaluated at a group outside its
/// class, mismatched endpoints of a biset word.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace gb
