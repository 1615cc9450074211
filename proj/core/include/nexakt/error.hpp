#pragma once

#include <stdexcept>
#include <string>

namespace nexakt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension or degree-range mismatch between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Operands live over different algebras.
class ContextError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

// The supplied nilpotency bound does not kill all paths of that length.
class BoundError : public Error {
 public:
  using Error::Error;
};

// An object is not in the subcategory an operation requires.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A linear solve that the theory guarantees turned out unsolvable.
class HypothesisError : public Error {
 public:
  HypothesisError(const std::string& what, int degree = -1)
      : Error(what), degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

class SetupError : public Error {
 public:
  using Error::Error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace nexakt
