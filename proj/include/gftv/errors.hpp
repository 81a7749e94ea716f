#pragma once

#include <stdexcept>
#include <string>

namespace gftv {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- series construction / evaluation ---------------------------------

// A supplied coefficient is nonzero inside the forced gap p < k < p+n.
struct GapViolation : Error { using Error::Error; };

// A coefficient index lies outside the representable window.
struct IndexOutOfRange : Error { using Error::Error; };

// A shifted evaluation would divide by z beyond the series' vanishing order.
struct ShiftUnderflow : Error { using Error::Error; };

// A quotient denominator fell below the hard floor (1e-12) at the query point.
struct DenominatorVanishes : Error { using Error::Error; };

// --- parameters and grids ----------------------------------------------

// A parameter violates its documented admissible range.
struct ParamOutOfRange : Error { using Error::Error; };

// The theta-expression is evaluated at an excluded singular angle.
struct SingularTheta : Error { using Error::Error; };

// --- circle sweeps ------------------------------------------------------

// |f| at a contour sample is below tolerance: winding number undefined.
struct ZeroOnContour : Error { using Error::Error; };

// Phase increments stay too large after local refinement, or the summed
// phase is not close to an integer multiple of 2*pi.
struct UnstableWinding : Error { using Error::Error; };

// Winding count on the contour differs from the expected zero count at 0.
struct ExtraZeros : Error { using Error::Error; };

// The boundary maximum used by the tangency check is numerically degenerate.
struct DegenerateMax : Error { using Error::Error; };

// --- corpus files -------------------------------------------------------

// Unparseable corpus file; message carries the 1-based line number.
struct MalformedFile : Error { using Error::Error; };

// Parsed entry violates a structural invariant (gap, duplicate id, ...).
struct InvariantViolation : Error { using Error::Error; };

// Unrecognized classical-function name.
struct UnknownName : Error { using Error::Error; };

} // namespace gftv
