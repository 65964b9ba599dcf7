#pragma once

#include <stdexcept>
#include <string>

namespace ckgeom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error { using Error::Error; };

// Division by a trigonometric pole (ck too close to zero, r = 0, ...).
struct PoleError : Error { using Error::Error; };

// Chart coordinates outside the declared domain of the chart.
struct ChartDomainError : Error { using Error::Error; };

// A Weierstrass point that the requested chart does not cover.
struct ChartCoverageError : Error { using Error::Error; };

// Metric query that needs the subsidiary metric outside kappa2 = 0,
// or mixes leafwise and transversal directions.
struct DegenerateMetricError : Error { using Error::Error; };

// Distance requested between points with no connecting geodesic of the
// queried causal type.
struct CausalityError : Error { using Error::Error; };

// Cycle whose curvature formula has a non-positive radicand.
struct ImaginaryCurvatureError : Error { using Error::Error; };

// Equidistant construction over an isotropic base geodesic.
struct IsotropicBaseError : Error { using Error::Error; };

// Degenerate cycle coefficients (e.g. alpha + alpha0 = 0 in a power query).
struct DegenerateCycleError : Error { using Error::Error; };

// Group element that is not invertible / not in the expected group.
struct SingularMatrixError : Error { using Error::Error; };

// Lambda-translation flow leaving the principal branch.
struct BranchOverflowError : Error { using Error::Error; };

// Dilation or inversion pushing a point out of the space.
struct RangeError : Error { using Error::Error; };

// Projection from a point that sits exactly on the projection pole.
struct PoleProjectionError : Error { using Error::Error; };

// Unknown symbolic space name.
struct UnknownSpaceError : Error { using Error::Error; };

}  // namespace ckgeom
