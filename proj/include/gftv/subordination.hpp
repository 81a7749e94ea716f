#pragma once

#include "gftv/disk.hpp"
#include "gftv/series.hpp"

namespace gftv {

// Image disk of the unit disk under the target map lambda (1 - z)/(lambda - z):
// a disk centered at lambda/(lambda+1) with equal radius, so subordination
// of (1/p) z f'/f to the target is equivalent to containment of its
// boundary values in this disk.  Requires lambda > 1.
struct MobiusTarget {
    explicit MobiusTarget(double lambda);

    double lambda;
    double center;
    double radius;
};

// Evaluator for the normalized logarithmic derivative (1/p) z f'(z)/f(z).
Evaluator starlike_quotient(const FunctionSpec& f);

// radius - sup_{outer circle} |(1/p) z f'/f - center|.  Positive means the
// disk inequality holds with that much slack.  Both checks first certify
// that f has exactly p zeros (all at the origin) inside the outer circle;
// a different winding count raises ExtraZeros.
double disk_inequality_margin(const FunctionSpec& f, double lambda, const GridSpec& grid);

// True when every sample on every configured circle lies strictly inside
// the target disk (distance < radius - tol).
bool containment_subordination_check(const FunctionSpec& f, double lambda, const GridSpec& grid);

} // namespace gftv
