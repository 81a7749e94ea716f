#include "gftv/subordination.hpp"

#include <cmath>
#include <memory>

namespace gftv {

namespace {

// z f' and f share the factor z^p; evaluating both with shift p keeps the
// quotient finite at the origin.
struct QuotientParts {
    PowerSeries zfprime;
    PowerSeries f;
    int p;
};

QuotientParts make_parts(const FunctionSpec& f) {
    PowerSeries zfp(f.coeffs.lowest_index(),
                    std::vector<Complex>(static_cast<std::size_t>(
                        f.coeffs.truncation_order() - f.coeffs.lowest_index() + 1)));
    for (int k = f.coeffs.lowest_index(); k <= f.coeffs.truncation_order(); ++k)
        zfp.set_coeff(k, static_cast<double>(k) * f.coeffs.coeff(k));
    return QuotientParts{std::move(zfp), f.coeffs, f.p};
}

void precheck_zero_count(const FunctionSpec& f, const GridSpec& grid) {
    grid.validate();
    const int w = winding_number(f, grid.outer_radius(), grid.angular_count, grid.tol);
    if (w != f.p)
        throw ExtraZeros("winding number " + std::to_string(w) + " on |z| = " +
                         std::to_string(grid.outer_radius()) + " differs from valence " +
                         std::to_string(f.p) + ": zeros away from the origin");
}

} // namespace

MobiusTarget::MobiusTarget(double l) : lambda(l) {
    if (!(l > 1.0))
        throw ParamOutOfRange("target map requires lambda > 1, got " + std::to_string(l));
    center = l / (l + 1.0);
    radius = l / (l + 1.0);
}

Evaluator starlike_quotient(const FunctionSpec& f) {
    auto parts = std::make_shared<QuotientParts>(make_parts(f));
    return [parts](Complex z) {
        return quotient_eval(parts->zfprime, parts->f, parts->p, z) /
               static_cast<double>(parts->p);
    };
}

double disk_inequality_margin(const FunctionSpec& f, double lambda, const GridSpec& grid) {
    const MobiusTarget target(lambda);
    precheck_zero_count(f, grid);
    const Evaluator q = starlike_quotient(f);
    const double sup = sup_mod_on_circle(
        [&](Complex z) { return q(z) - Complex(target.center); },
        grid.outer_radius(), grid.angular_count);
    return target.radius - sup;
}

bool containment_subordination_check(const FunctionSpec& f, double lambda, const GridSpec& grid) {
    const MobiusTarget target(lambda);
    precheck_zero_count(f, grid);
    const Evaluator q = starlike_quotient(f);
    for (double r : grid.radii) {
        const double sup = sup_mod_on_circle(
            [&](Complex z) { return q(z) - Complex(target.center); },
            r, grid.angular_count);
        if (!(sup < target.radius - grid.tol)) return false;
    }
    return true;
}

} // namespace gftv
