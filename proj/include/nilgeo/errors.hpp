#pragma once

#include <stdexcept>
#include <string>

namespace nilgeo {

// Two failure families. InputError means the caller handed us something
// malformed (CLI exit code 1); NumericalError means an internal numerical
// breakdown on well-formed input (CLI exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSkew : InputError {
  explicit NotSkew(const std::string& what) : InputError(what) {}
};

struct DimensionMismatch : InputError {
  explicit DimensionMismatch(const std::string& what) : InputError(what) {}
};

struct DependentBasis : InputError {
  explicit DependentBasis(const std::string& what) : InputError(what) {}
};

struct NotOrthogonal : InputError {
  explicit NotOrthogonal(const std::string& what) : InputError(what) {}
};

struct SingularPhi : InputError {
  explicit SingularPhi(const std::string& what) : InputError(what) {}
};

struct WrongCount : InputError {
  explicit WrongCount(const std::string& what) : InputError(what) {}
};

struct ZeroPolynomial : InputError {
  explicit ZeroPolynomial(const std::string& what) : InputError(what) {}
};

struct NotDivisible : InputError {
  explicit NotDivisible(const std::string& what) : InputError(what) {}
};

struct BadInput : InputError {
  explicit BadInput(const std::string& what) : InputError(what) {}
};

struct DegenerateFrame : NumericalError {
  explicit DegenerateFrame(const std::string& what) : NumericalError(what) {}
};

struct DegenerateDraw : NumericalError {
  explicit DegenerateDraw(const std::string& what) : NumericalError(what) {}
};

struct ConvergenceFailure : NumericalError {
  explicit ConvergenceFailure(const std::string& what) : NumericalError(what) {}
};

}  // namespace nilgeo
