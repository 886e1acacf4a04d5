#pragma once

#include <stdexcept>
#include <string>

namespace catcheck {

  // Base for every error raised by the library. Decisions that come out
  // negative ("not Hopf", "not associative") are NOT errors; they are
  // reported with a witness. Errors are for malformed inputs and contract
  // violations.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // g∘f requested with codomain(f) != domain(g).
  class CompositionError : public Error {
   public:
    using Error::Error;
  };

  // Morphisms or objects from two different instances (e.g. F_2 and F_3).
  class InstanceMismatch : public Error {
   public:
    using Error::Error;
  };

  // Structure maps whose shapes do not fit the declared carrier.
  class ShapeError : public Error {
   public:
    using Error::Error;
  };

  // A configured bound (arity, dimension, enumeration budget) was exceeded.
  class BoundError : public Error {
   public:
    using Error::Error;
  };

  // An operation was called on an input that fails its precondition check,
  // e.g. antipode_from_shear on a bialgebra whose shear is not invertible.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Exact rational arithmetic left the representable range.
  class ArithmeticOverflow : public Error {
   public:
    using Error::Error;
  };

}  // namespace catcheck
