#pragma once

#include <complex>
#include <map>
#include <vector>

#include "gftv/errors.hpp"

namespace gftv {

using Complex = std::complex<double>;

// Hard floor below which a quotient denominator counts as vanished.
inline constexpr double kDenominatorFloor = 1e-12;

// Default truncation order for corpus functions.
inline constexpr int kDefaultTruncation = 64;

// Truncated power series sum_k c_k z^k with dense complex coefficients
// over a contiguous index window [lowest_index(), truncation_order()].
class PowerSeries {
public:
    PowerSeries() : lo_(0), coeffs_(1, Complex(0.0)) {}
    PowerSeries(int lowest_index, std::vector<Complex> coeffs);

    // Builds a series over [0 or min key, truncation_order] from sparse input.
    static PowerSeries from_map(const std::map<int, Complex>& coeffs,
                                int lowest_index, int truncation_order);

    int lowest_index() const { return lo_; }
    int truncation_order() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }

    // Smallest k with c_k != 0; truncation_order()+1 when identically zero.
    int lowest_nonzero_index() const;
    bool identically_zero() const;

    Complex coeff(int k) const;           // 0 outside the window
    void set_coeff(int k, Complex v);     // throws IndexOutOfRange outside it

    PowerSeries derivative() const;

    // Evaluates sum_k c_k z^(k-shift).  Requires every nonzero coefficient
    // index to satisfy k >= shift; otherwise ShiftUnderflow.
    Complex eval_shifted(int shift, Complex z) const;

private:
    int lo_;
    std::vector<Complex> coeffs_;
};

// A member of the multivalent class: f(z) = z^p + sum_{k>=p+n} c_k z^k,
// truncated at order N.  `exact` is false for truncations of infinite
// series; `tail_coeff` then bounds |c_{N+1}| for the tail estimate.
struct FunctionSpec {
    int p = 1;
    int n = 1;
    bool exact = true;
    double tail_coeff = 0.0;
    PowerSeries coeffs;

    int truncation_order() const { return coeffs.truncation_order(); }
    Complex eval(Complex z) const { return coeffs.eval_shifted(0, z); }
};

// Disk function w with w(0) = 0, vanishing at least to `order`, used by
// the boundary-tangency checks.
struct TestFunction {
    int order = 1;
    PowerSeries coeffs;

    Complex eval(Complex z) const { return coeffs.eval_shifted(0, z); }
};

// Validates the class invariants (c_p forced to 1, zero gap p < k < p+n,
// indices within [p, N]) and builds the function.
FunctionSpec make_function(int p, int n, const std::map<int, Complex>& coeffs, int N = kDefaultTruncation);

// Validates that all nonzero indices are >= max(order, 1) and builds w.
TestFunction make_test_function(int order, const std::map<int, Complex>& coeffs, int N = kDefaultTruncation);

PowerSeries differentiate(const PowerSeries& s);
PowerSeries differentiate(const FunctionSpec& f);
PowerSeries differentiate(const TestFunction& w);

Complex eval_shifted(const PowerSeries& s, int shift, Complex z);

// Evaluates the ratio numer(z)/denom(z) by factoring z^shift out of both
// series, which gives the correct finite limit at z = 0 when both vanish
// to order >= shift.  Throws DenominatorVanishes when the factored
// denominator has modulus <= 1e-12 at z.
Complex quotient_eval(const PowerSeries& numer, const PowerSeries& denom, int shift, Complex z);

// Geometric tail estimate tail_coeff * r^(N+1) / (1 - r) for inexact
// truncations; identically 0 for exact ones.
double tail_bound(const FunctionSpec& f, double r);

} // namespace gftv
