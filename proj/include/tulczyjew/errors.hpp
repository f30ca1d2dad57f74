#ifndef TULCZYJEW__ERRORS_HPP_
#define TULCZYJEW__ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tulczyjew {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Operands are dimensioned for different algebras, or a precondition on
/// slot compatibility is violated.
class ContractViolation : public Error
{
public:
  using Error::Error;
};

/// A matrix is not in the span of the generators, or generators do not
/// reproduce the structure constants.
class RepresentationError : public Error
{
public:
  using Error::Error;
};

/// Operands belong to different groups.
class GroupMismatch : public Error
{
public:
  using Error::Error;
};

/// A matrix supplied as a tangent vector at g is not tangent there.
class NotTangent : public Error
{
public:
  using Error::Error;
};

/// The inertia form of a body has rank below the algebra dimension.
class DegenerateBody : public Error
{
public:
  using Error::Error;
};

/// A symmetric form that must be positive definite is not.
class SingularForm : public Error
{
public:
  using Error::Error;
};

/// The Legendre map of a Lagrangian could not be inverted.
class NotHyperregular : public Error
{
public:
  using Error::Error;
};

/// Implicit midpoint fixed-point iteration failed to converge.
class ConvergenceError : public Error
{
public:
  using Error::Error;
};

/// Malformed configuration or point literal.
class ConfigError : public Error
{
public:
  using Error::Error;
};

}  // namespace tulczyjew

#endif
