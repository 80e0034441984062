#pragma once

#include <stdexcept>
#include <string>

namespace fedosov {

/// Base class of every error thrown by the engine.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fiber pairing not defined (Vector*Vector, Vector*Matrix, or kind-level analogue).
struct IncompatiblePairing : Error { using Error::Error; };

/// fiber_trace applied to a vector value.
struct NotTraceable : Error { using Error::Error; };

/// Jet and torus function elements mixed in one operation.
struct BackendMismatch : Error { using Error::Error; };

/// Input jets were supplied to too low an order for the requested computation.
struct InsufficientJetOrder : Error { using Error::Error; };

/// Operation defined on one backend only (e.g. integration on the torus).
struct UnsupportedBackend : Error { using Error::Error; };

/// (generalized) connection squared does not match (i/h)[R, .] -- convention bug.
struct CurvatureMismatch : Error { using Error::Error; };

/// A degree-graded fixed point iteration failed to stabilize.
struct NonConvergence : Error { using Error::Error; };

/// D*D != 0 or a Leibniz compatibility failed on a sample.
struct FlatnessViolation : Error { using Error::Error; };

/// solve_D_equation called with a non-D-closed right hand side.
struct NotClosed : Error { using Error::Error; };

/// An extended Weyl element would acquire a monomial with 2k + |y| < 0.
struct ExtendedGradeViolation : Error { using Error::Error; };

/// A homotopy consistency condition (d lambda = -dOmega/dt, ...) failed.
struct ConsistencyViolation : Error { using Error::Error; };

/// Closed-form expressions requested outside their domain (mu or kappa nonzero).
struct UnsupportedInputs : Error { using Error::Error; };

/// Malformed input file.
struct SchemaError : Error { using Error::Error; };

/// Well-formed input violating a geometric invariant.
struct ValidationError : Error { using Error::Error; };

} // namespace fedosov
