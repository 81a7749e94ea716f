#include "gftv/series.hpp"

#include <cmath>
#include <utility>

namespace gftv {

namespace {

std::string index_msg(const char* what, int k) {
    return std::string(what) + " at index " + std::to_string(k);
}

} // namespace

PowerSeries::PowerSeries(int lowest_index, std::vector<Complex> coeffs)
    : lo_(lowest_index), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, Complex(0.0));
}

PowerSeries PowerSeries::from_map(const std::map<int, Complex>& coeffs,
                                  int lowest_index, int truncation_order) {
    if (truncation_order < lowest_index)
        throw IndexOutOfRange("truncation order " + std::to_string(truncation_order) +
                              " below lowest index " + std::to_string(lowest_index));
    std::vector<Complex> dense(static_cast<std::size_t>(truncation_order - lowest_index + 1),
                               Complex(0.0));
    for (const auto& [k, c] : coeffs) {
        if (k < lowest_index || k > truncation_order)
            throw IndexOutOfRange(index_msg("coefficient outside window", k));
        dense[static_cast<std::size_t>(k - lowest_index)] = c;
    }
    return PowerSeries(lowest_index, std::move(dense));
}

int PowerSeries::lowest_nonzero_index() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != Complex(0.0)) return lo_ + static_cast<int>(i);
    return truncation_order() + 1;
}

bool PowerSeries::identically_zero() const {
    return lowest_nonzero_index() > truncation_order();
}

Complex PowerSeries::coeff(int k) const {
    if (k < lo_ || k > truncation_order()) return Complex(0.0);
    return coeffs_[static_cast<std::size_t>(k - lo_)];
}

void PowerSeries::set_coeff(int k, Complex v) {
    if (k < lo_ || k > truncation_order())
        throw IndexOutOfRange(index_msg("coefficient outside window", k));
    coeffs_[static_cast<std::size_t>(k - lo_)] = v;
}

PowerSeries PowerSeries::derivative() const {
    // d/dz sum c_k z^k = sum k c_k z^(k-1); keep the window aligned at lo_-1.
    std::vector<Complex> dc(coeffs_.size(), Complex(0.0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const int k = lo_ + static_cast<int>(i);
        dc[i] = static_cast<double>(k) * coeffs_[i];
    }
    return PowerSeries(lo_ - 1, std::move(dc));
}

Complex PowerSeries::eval_shifted(int shift, Complex z) const {
    // Coefficients strictly below the shift must vanish identically.
    for (int k = lo_; k < shift && k <= truncation_order(); ++k)
        if (coeff(k) != Complex(0.0))
            throw ShiftUnderflow(index_msg("nonzero coefficient below shift", k));

    // Horner evaluation of sum_{k>=shift} c_k z^(k-shift).
    Complex acc(0.0);
    for (int k = truncation_order(); k >= shift; --k)
        acc = acc * z + coeff(k);
    return acc;
}

FunctionSpec make_function(int p, int n, const std::map<int, Complex>& coeffs, int N) {
    if (p < 1) throw ParamOutOfRange("valence p must be >= 1, got " + std::to_string(p));
    if (n < 1) throw ParamOutOfRange("gap order n must be >= 1, got " + std::to_string(n));
    if (N < p) throw ParamOutOfRange("truncation N must be >= p, got " + std::to_string(N));

    PowerSeries s = [&] {
        std::vector<Complex> dense(static_cast<std::size_t>(N - p + 1), Complex(0.0));
        return PowerSeries(p, std::move(dense));
    }();
    for (const auto& [k, c] : coeffs) {
        if (k == p) continue; // leading coefficient is forced below
        if (k < p || k > N)
            throw IndexOutOfRange(index_msg("coefficient outside [p, N]", k));
        if (k < p + n && c != Complex(0.0))
            throw GapViolation("nonzero coefficient at index " + std::to_string(k) +
                               " inside gap " + std::to_string(p) + " < k < " +
                               std::to_string(p + n));
        s.set_coeff(k, c);
    }
    s.set_coeff(p, Complex(1.0));

    FunctionSpec f;
    f.p = p;
    f.n = n;
    f.exact = true;
    f.tail_coeff = 0.0;
    f.coeffs = std::move(s);
    return f;
}

TestFunction make_test_function(int order, const std::map<int, Complex>& coeffs, int N) {
    if (order < 1) throw ParamOutOfRange("order must be >= 1, got " + std::to_string(order));
    if (N < order) throw ParamOutOfRange("truncation N must be >= order");

    PowerSeries s = PowerSeries::from_map({}, 1, N);
    for (const auto& [k, c] : coeffs) {
        if (k < 1 || k > N)
            throw IndexOutOfRange(index_msg("coefficient outside [1, N]", k));
        if (k < order && c != Complex(0.0))
            throw InvariantViolation(index_msg("nonzero coefficient below declared order", k));
        s.set_coeff(k, c);
    }

    TestFunction w;
    w.order = order;
    w.coeffs = std::move(s);
    return w;
}

PowerSeries differentiate(const PowerSeries& s) { return s.derivative(); }
PowerSeries differentiate(const FunctionSpec& f) { return f.coeffs.derivative(); }
PowerSeries differentiate(const TestFunction& w) { return w.coeffs.derivative(); }

Complex eval_shifted(const PowerSeries& s, int shift, Complex z) {
    return s.eval_shifted(shift, z);
}

Complex quotient_eval(const PowerSeries& numer, const PowerSeries& denom, int shift, Complex z) {
    const Complex d = denom.eval_shifted(shift, z);
    if (std::abs(d) <= kDenominatorFloor)
        throw DenominatorVanishes("quotient denominator modulus " + std::to_string(std::abs(d)) +
                                  " at z = (" + std::to_string(z.real()) + ", " +
                                  std::to_string(z.imag()) + ")");
    return numer.eval_shifted(shift, z) / d;
}

double tail_bound(const FunctionSpec& f, double r) {
    if (f.exact || f.tail_coeff == 0.0) return 0.0;
    if (!(r > 0.0 && r < 1.0))
        throw ParamOutOfRange("tail bound requires 0 < r < 1");
    return f.tail_coeff * std::pow(r, f.truncation_order() + 1) / (1.0 - r);
}

} // namespace gftv
