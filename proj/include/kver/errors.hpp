#pragma once

#include <stdexcept>
#include <string>

namespace kver {

/// Base class for all verification-path errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An extra interpolation sample disagreed with the fitted polynomial
/// (wrong degree bound or chamber misdetection).
struct VerificationFailure : Error {
    using Error::Error;
};

/// isolate_root: the polynomial does not change sign on the given bracket.
struct NoSignChange : Error {
    using Error::Error;
};

/// isolate_root: the Sturm count on the bracket is not exactly one.
struct MultipleRoots : Error {
    using Error::Error;
};

/// decompose: the class is not pseudo-effective (negative coefficient or
/// inconsistent system in the support iteration).
struct NotPseudoEffective : Error {
    using Error::Error;
};

/// A chamber boundary or pseudo-effective threshold is irrational; it is
/// bracketed and reported, never approximated silently.
struct IrrationalBreakpoint : Error {
    using Error::Error;
};

/// h_profile: the requested point stratum does not lie on the flag curve.
struct StratumNotOnFlag : Error {
    using Error::Error;
};

/// delta_point_bound: the stratum has no flag assignment (untreated case;
/// reported, not guessed).
struct NoFlagAssigned : Error {
    using Error::Error;
};

/// An internal exact invariant failed (degree bound, continuity,
/// monotonicity).  Indicates a defect, not bad input.
struct InvariantViolation : Error {
    using Error::Error;
};

} // namespace kver
