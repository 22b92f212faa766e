// Exception types thrown by the single-element weak Galerkin toolkit.

#ifndef WGDR_ERRORS_HPP
#define WGDR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wgdr {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A face loop whose vertices deviate from a common plane beyond tolerance.
struct NonPlanarFace final : Error {
  using Error::Error;
};

/// The face loops do not close up: some edge is not shared by exactly two faces.
struct OpenSurface final : Error {
  using Error::Error;
};

/// A face normal points into the element, or a vertex lies outside a face
/// plane (non-convex input or a mis-ordered loop).
struct InwardNormal final : Error {
  using Error::Error;
};

/// Queried edge does not lie on the boundary of the queried face.
struct EdgeNotOnFace final : Error {
  using Error::Error;
};

/// Queried vertex is not an endpoint of the queried edge.
struct VertexNotOnEdge final : Error {
  using Error::Error;
};

/// Polynomial degree invalid for the requested space family.
struct DegreeOutOfRange final : Error {
  using Error::Error;
};

/// The inclusion map's constant pattern is defined only on tetrahedra and boxes.
struct UnsupportedElement final : Error {
  using Error::Error;
};

/// The inclusion map exists only in the lowest-order (k = 0) space.
struct DegreeNotZero final : Error {
  using Error::Error;
};

/// An entity Gram matrix failed to factor; signals a basis or quadrature defect.
struct SingularGram final : Error {
  using Error::Error;
};

/// Exactness verdicts requested outside the two proven configurations.
struct UnsupportedCase final : Error {
  using Error::Error;
};

}  // namespace wgdr

#endif
