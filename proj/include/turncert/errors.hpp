#pragma once

#include <stdexcept>
#include <string>

namespace turncert {

// All enclosure failures are signalled, never encoded as infinite or NaN
// endpoints. Callers that can recover (quadrature subdivision, parameter
// bisection) catch the specific type; everything else propagates.
struct EnclosureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Division by an interval containing zero.
struct DivByZero : EnclosureError {
  DivByZero() : EnclosureError("division by an interval containing zero") {}
  explicit DivByZero(const std::string& what) : EnclosureError(what) {}
};

// Argument leaves the real domain of the requested function (log/sqrt of a
// set meeting the negative axis, parameters outside a stated range, ...).
struct DomainError : EnclosureError {
  using EnclosureError::EnclosureError;
};

// tan over an interval containing pi/2 + k*pi.
struct PoleError : EnclosureError {
  using EnclosureError::EnclosureError;
};

// Intersection of disjoint intervals.
struct EmptyIntersection : EnclosureError {
  EmptyIntersection() : EnclosureError("intersection is empty") {}
};

// Geometric midpoint requested on an interval with lo <= 0.
struct InvalidGeomSplit : EnclosureError {
  InvalidGeomSplit() : EnclosureError("geometric midpoint needs 0 < lo") {}
};

// A series coefficient that must vanish at a removable singularity does not
// provably vanish, or the leading denominator coefficient may be zero.
struct CancellationFailed : EnclosureError {
  using EnclosureError::EnclosureError;
};

// A tail bound's validity condition fails (cutoff too small for the
// exponential estimates to apply).
struct TailInvalid : EnclosureError {
  using EnclosureError::EnclosureError;
};

// A branch-and-bound loop hit its work cap before reaching the requested
// width.
struct DepthExceeded : EnclosureError {
  using EnclosureError::EnclosureError;
};

}  // namespace turncert
