#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace homlie {

using Triple = std::array<std::size_t, 3>;

/// A well-formed request whose mathematical answer is an error (CLI exit code 1).
/// Malformed requests throw std::invalid_argument instead (CLI exit code 2).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SkewViolation : public MathError {
 public:
  explicit SkewViolation(Triple where);
  Triple where;
};

class JacobiViolation : public MathError {
 public:
  explicit JacobiViolation(Triple where);
  Triple where;
};

class SingularMatrix : public MathError {
 public:
  SingularMatrix() : MathError("matrix is singular") {}
};

class NotAGenDer : public MathError {
 public:
  using MathError::MathError;
};

class ZeroDerivation : public MathError {
 public:
  ZeroDerivation() : MathError("ZeroDerivation: the zero tuple has no orbit representative") {}
};

class Unsupported : public MathError {
 public:
  using MathError::MathError;
};

class NotInvariant : public MathError {
 public:
  using MathError::MathError;
};

/// rho([x,y]) L = rho(Tx) rho(y) - rho(Ty) rho(x) failed on the pair (i, j).
class RepresentationViolation : public MathError {
 public:
  RepresentationViolation(std::size_t i, std::size_t j);
  std::size_t i, j;
};

}  // namespace homlie
