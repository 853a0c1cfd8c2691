#pragma once

#include <stdexcept>
#include <string>

namespace torushom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user-supplied data (words, permutations, specs, text formats).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Errors that can only arise from a convention bug or a wrong input value,
/// never from a well-formed computation.
class InternalContradiction : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public InternalContradiction {
 public:
  using InternalContradiction::InternalContradiction;
};

class ZeroDenominator : public InternalContradiction {
 public:
  using InternalContradiction::InternalContradiction;
};

class CycleDetected : public InternalContradiction {
 public:
  using InternalContradiction::InternalContradiction;
};

class DepthExceeded : public InternalContradiction {
 public:
  using InternalContradiction::InternalContradiction;
};

class NonPolynomialResult : public InternalContradiction {
 public:
  using InternalContradiction::InternalContradiction;
};

class InvalidState : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class SizeMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class IndexOutOfRange : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class FingerprintMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

}  // namespace torushom
