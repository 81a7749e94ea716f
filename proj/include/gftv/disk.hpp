#pragma once

#include <functional>
#include <vector>

#include "gftv/series.hpp"

namespace gftv {

// Sampling plan for boundary-circle sweeps.  Radii must be strictly
// ascending inside (0,1); margins are reported against the outermost one,
// the inner circles feed the monotonicity cross-checks.
struct GridSpec {
    std::vector<double> radii{0.9, 0.99, 0.999};
    int angular_count = 4096;
    double tol = 1e-9;

    void validate() const;      // throws ParamOutOfRange
    double outer_radius() const;
};

using Evaluator = std::function<Complex(Complex)>;
using RealEvaluator = std::function<double(Complex)>;

// Extrema of F over the M-point uniform angular grid on |z| = r.
// Sweeps run in fixed index order; evaluator exceptions propagate.
double inf_re_on_circle(const Evaluator& F, double r, int M);
double sup_re_on_circle(const Evaluator& F, double r, int M);
double sup_mod_on_circle(const Evaluator& F, double r, int M);
double inf_on_circle(const RealEvaluator& F, double r, int M);
double sup_on_circle(const RealEvaluator& F, double r, int M);

// Zero count of F inside |z| < r via summed phase increments of F along
// the circle.  Increments above pi/2 trigger local 4x refinement (up to
// three rounds) before UnstableWinding; |F| <= tol at any sample raises
// ZeroOnContour.  The summed phase must land within 0.1 of 2*pi*k.
int winding_number(const Evaluator& F, double r, int M, double tol = 1e-9);
int winding_number(const FunctionSpec& f, double r, int M, double tol = 1e-9);

} // namespace gftv
