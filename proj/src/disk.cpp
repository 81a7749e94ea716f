#include "gftv/disk.hpp"

#include <cmath>
#include <limits>

namespace gftv {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPhaseStep = 1.5707963267948966; // pi/2
constexpr int kRefineFactor = 4;
constexpr int kMaxRefineDepth = 3;
constexpr double kIntegerSlack = 0.1;

Complex on_circle(double r, double theta) {
    return {r * std::cos(theta), r * std::sin(theta)};
}

void check_grid_args(double r, int M) {
    if (!(r > 0.0 && r < 1.0))
        throw ParamOutOfRange("circle radius must lie in (0,1), got " + std::to_string(r));
    if (M < 16)
        throw ParamOutOfRange("angular sample count must be >= 16, got " + std::to_string(M));
}

// Contour walker: evaluates F on |z| = r, guards against on-contour zeros,
// and accumulates phase increments with local refinement.
struct PhaseWalker {
    const Evaluator& F;
    double r;
    double tol;

    Complex value_at(double theta) const {
        const Complex v = F(on_circle(r, theta));
        if (std::abs(v) <= tol)
            throw ZeroOnContour("|f| = " + std::to_string(std::abs(v)) +
                                " at theta = " + std::to_string(theta) +
                                ", r = " + std::to_string(r));
        return v;
    }

    // Phase change of f over (ta, tb], endpoint values supplied.  A single
    // increment above pi/2 is ambiguous (the branch could have wrapped), so
    // the arc is split 4x, at most kMaxRefineDepth times.
    double increment(double ta, double tb, Complex va, Complex vb, int depth) const {
        const double d = std::arg(vb / va);
        if (std::abs(d) <= kPhaseStep) return d;
        if (depth >= kMaxRefineDepth)
            throw UnstableWinding("phase increment " + std::to_string(d) +
                                  " persists after " + std::to_string(kMaxRefineDepth) +
                                  " refinement rounds near theta = " + std::to_string(ta));
        double total = 0.0;
        double tp = ta;
        Complex vp = va;
        for (int i = 1; i <= kRefineFactor; ++i) {
            const double ti = ta + (tb - ta) * i / kRefineFactor;
            const Complex vi = (i == kRefineFactor) ? vb : value_at(ti);
            total += increment(tp, ti, vp, vi, depth + 1);
            tp = ti;
            vp = vi;
        }
        return total;
    }
};

} // namespace

void GridSpec::validate() const {
    if (radii.empty()) throw ParamOutOfRange("radius list must not be empty");
    double prev = 0.0;
    for (double r : radii) {
        if (!(r > prev && r < 1.0))
            throw ParamOutOfRange("radii must be strictly ascending inside (0,1)");
        prev = r;
    }
    if (angular_count < 16)
        throw ParamOutOfRange("angular sample count must be >= 16");
    if (!(tol > 0.0)) throw ParamOutOfRange("tolerance must be positive");
}

double GridSpec::outer_radius() const {
    if (radii.empty()) throw ParamOutOfRange("radius list must not be empty");
    return radii.back();
}

double inf_on_circle(const RealEvaluator& F, double r, int M) {
    check_grid_args(r, M);
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < M; ++j) {
        const double v = F(on_circle(r, kTwoPi * j / M));
        if (v < best) best = v;
    }
    return best;
}

double sup_on_circle(const RealEvaluator& F, double r, int M) {
    check_grid_args(r, M);
    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < M; ++j) {
        const double v = F(on_circle(r, kTwoPi * j / M));
        if (v > best) best = v;
    }
    return best;
}

double inf_re_on_circle(const Evaluator& F, double r, int M) {
    return inf_on_circle([&](Complex z) { return F(z).real(); }, r, M);
}

double sup_re_on_circle(const Evaluator& F, double r, int M) {
    return sup_on_circle([&](Complex z) { return F(z).real(); }, r, M);
}

double sup_mod_on_circle(const Evaluator& F, double r, int M) {
    return sup_on_circle([&](Complex z) { return std::abs(F(z)); }, r, M);
}

int winding_number(const Evaluator& F, double r, int M, double tol) {
    check_grid_args(r, M);
    const PhaseWalker walker{F, r, tol};

    std::vector<Complex> vals(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j)
        vals[static_cast<std::size_t>(j)] = walker.value_at(kTwoPi * j / M);

    double total = 0.0;
    for (int j = 0; j < M; ++j) {
        const double ta = kTwoPi * j / M;
        const double tb = kTwoPi * (j + 1) / M;
        const Complex& va = vals[static_cast<std::size_t>(j)];
        const Complex& vb = vals[static_cast<std::size_t>((j + 1) % M)];
        total += walker.increment(ta, tb, va, vb, 0);
    }

    const double rounded = std::round(total / kTwoPi);
    if (std::abs(total - rounded * kTwoPi) > kIntegerSlack)
        throw UnstableWinding("summed phase " + std::to_string(total) +
                              " is not within 0.1 of an integer multiple of 2*pi");
    return static_cast<int>(rounded);
}

int winding_number(const FunctionSpec& f, double r, int M, double tol) {
    return winding_number([&f](Complex z) { return f.eval(z); }, r, M, tol);
}

} // namespace gftv
