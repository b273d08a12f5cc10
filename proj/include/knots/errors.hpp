#pragma once

#include <stdexcept>
#include <string>

namespace knots {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed notation (bad token, stray separator).
class SyntaxError : public Error {
 public:
  using Error::Error;
};

// Well-formed notation that does not describe a diagram: a crossing seen a
// number of times other than two, mismatched roles or signs.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Invalid argument relative to a particular diagram (component index, edge,
// permutation).
class IndexError : public Error {
 public:
  using Error::Error;
};

class UnknownCrossing : public Error {
 public:
  using Error::Error;
};

class NonPlanarError : public Error {
 public:
  using Error::Error;
};

class InvalidSite : public Error {
 public:
  using Error::Error;
};

// Knot-only invariant requested on a link diagram.
class NotAKnot : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

// Point configurations violating general position.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

class GenericityFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace knots
