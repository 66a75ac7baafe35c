#pragma once

#include <stdexcept>
#include <string>

namespace drg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (array notation, graph files, result lines).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exact refinement reached its floor without resolving a sign.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A size or search cap was hit. Never a mathematical verdict.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// k_i = k_{i-1} b_{i-1} / c_i was not an integer.
class NonIntegralError : public Error {
 public:
  NonIntegralError(int index, const std::string& what)
      : Error(what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

}  // namespace drg
