#pragma once

#include <stdexcept>
#include <string>

namespace octeig {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No orientation of the seven Fano lines reproduces the worked examples.
class NoConsistentTable : public Error {
 public:
  using Error::Error;
};

/// Iterative eigenvalue kernel exhausted its sweep budget.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

/// A cyclic real-part formula needs a nonzero component and got zero.
class ZeroComponent : public Error {
 public:
  using Error::Error;
};

/// More than two distinct real multipliers survived deduplication.
class UnexpectedMultiplierCount : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace octeig
