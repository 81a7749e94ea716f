#include "gftv/criteria.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace gftv {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kSingularFloor = 1e-12;
constexpr long kMinThetaSamples = 1000;

void require(bool ok, const std::string& msg) {
    if (!ok) throw ParamOutOfRange(msg);
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

std::string theorem_name(Theorem t) {
    switch (t) {
        case Theorem::T21: return "T21";
        case Theorem::T22: return "T22";
        case Theorem::T23A: return "T23A";
        case Theorem::T23B: return "T23B";
        case Theorem::T24: return "T24";
    }
    return "?";
}

std::optional<Theorem> theorem_from_name(std::string_view name) {
    const std::string s = lower(name);
    if (s == "t21") return Theorem::T21;
    if (s == "t22") return Theorem::T22;
    if (s == "t23a") return Theorem::T23A;
    if (s == "t23b") return Theorem::T23B;
    if (s == "t24") return Theorem::T24;
    return std::nullopt;
}

void TheoremParams::validate() const {
    require(p >= 1, "p must be >= 1");
    require(n >= 1, "n must be >= 1");
    switch (theorem) {
        case Theorem::T21:
            require(alpha >= 0.0 && alpha < 1.0, "T21 requires 0 <= alpha < 1");
            break;
        case Theorem::T22:
            require(alpha >= 0.0, "T22 requires alpha >= 0");
            break;
        case Theorem::T23A:
            require(alpha >= 0.0 && alpha < 1.0, "T23A requires 0 <= alpha < 1");
            require(beta >= 0.0 && gamma >= 0.0, "T23 requires beta, gamma >= 0");
            require(beta + gamma > 0.0, "T23 requires beta + gamma > 0");
            break;
        case Theorem::T23B:
            require(alpha != 1.0, "T23B requires alpha != 1");
            require(beta >= 0.0 && gamma >= 0.0, "T23 requires beta, gamma >= 0");
            require(beta + gamma > 0.0, "T23 requires beta + gamma > 0");
            break;
        case Theorem::T24: {
            const LambdaRange lr = lambda_range(p, n);
            if (!lr.valid)
                throw ParamOutOfRange("T24 lambda range invalid for p = " + std::to_string(p) +
                                      ", n = " + std::to_string(n) + ": " + lr.diagnostic);
            if (!lr.contains(lambda))
                throw ParamOutOfRange("T24 requires lambda strictly inside the admissible range");
            break;
        }
    }
}

std::string TheoremParams::regime_note() const {
    if (theorem == Theorem::T23B && !(alpha >= 0.0 && alpha < 1.0))
        return "alpha outside the stated regime [0,1); bound extended by |1-alpha|";
    return {};
}

bool LambdaRange::contains(double lambda) const {
    if (!valid) return false;
    return lambda > lambda1 && (unbounded || lambda < lambda2);
}

double bound_t21(int p, int n, double alpha) {
    require(p >= 1 && n >= 1, "T21 requires p, n >= 1");
    require(alpha >= 0.0 && alpha < 1.0, "T21 requires 0 <= alpha < 1");
    return ((2.0 * p - n) + alpha * (2.0 * p + n)) / (2.0 * (alpha + 1.0));
}

double bound_t22(int p, int n, double alpha) {
    require(p >= 1 && n >= 1, "T22 requires p, n >= 1");
    require(alpha >= 0.0, "T22 requires alpha >= 0");
    return ((p + n) * alpha + (2.0 * p + n)) / (alpha + 2.0);
}

double bound_t23(T23Kind kind, int p, int n, double alpha, double beta, double gamma) {
    require(p >= 1 && n >= 1, "T23 requires p, n >= 1");
    require(beta >= 0.0 && gamma >= 0.0, "T23 requires beta, gamma >= 0");
    require(beta + gamma > 0.0, "T23 requires beta + gamma > 0");
    const double pn = static_cast<double>(p) * n;
    if (kind == T23Kind::A) {
        require(alpha >= 0.0 && alpha < 1.0, "T23A requires 0 <= alpha < 1");
        return std::pow(pn, gamma) * std::pow(1.0 - alpha, beta + gamma) /
               std::pow(2.0, beta + 2.0 * gamma);
    }
    require(alpha != 1.0, "T23B requires alpha != 1");
    return std::pow(pn, gamma) * std::pow(std::abs(1.0 - alpha), beta + gamma);
}

LambdaRange lambda_range(int p, int n) {
    require(p >= 1 && n >= 1, "lambda range requires p, n >= 1");
    LambdaRange lr;

    const double pd = p, nd = n;
    const double numer = 2.0 * nd + 4.0 * (2.0 * pd - 1.0);
    const double disc1 = 16.0 * nd + nd * nd + 32.0 * pd - 12.0 * nd * pd - 28.0 * pd * pd;
    const double disc2 = 16.0 - 8.0 * nd + nd * nd - 48.0 * pd + 4.0 * nd * pd + 36.0 * pd * pd;

    if (disc1 < 0.0) {
        lr.diagnostic = "lower-endpoint discriminant negative (" + std::to_string(disc1) + ")";
        return lr;
    }
    if (disc2 < 0.0) {
        lr.diagnostic = "upper-endpoint discriminant negative (" + std::to_string(disc2) + ")";
        return lr;
    }

    const double den1 = 4.0 + nd - 2.0 * pd + std::sqrt(disc1);
    if (!(den1 > 0.0)) {
        lr.diagnostic = "lower endpoint degenerate (denominator " + std::to_string(den1) + ")";
        return lr;
    }
    lr.lambda1 = numer / den1;

    const double den2 = -nd + 2.0 * pd + std::sqrt(disc2);
    if (den2 < 0.0) {
        lr.diagnostic = "upper endpoint degenerate (denominator " + std::to_string(den2) + ")";
        return lr;
    }
    if (den2 == 0.0) {
        lr.unbounded = true;
        lr.lambda2 = std::numeric_limits<double>::infinity();
    } else {
        lr.lambda2 = numer / den2;
    }

    if (!(lr.lambda1 > 0.0)) {
        lr.diagnostic = "lower endpoint not positive";
        return lr;
    }
    if (!lr.unbounded && !(lr.lambda1 < lr.lambda2)) {
        lr.diagnostic = "interval empty: lambda1 >= lambda2";
        return lr;
    }
    lr.valid = true;
    return lr;
}

double bound_t24(int p, int n, double lambda) {
    const LambdaRange lr = lambda_range(p, n);
    if (!lr.valid)
        throw ParamOutOfRange("T24 lambda range invalid for p = " + std::to_string(p) +
                              ", n = " + std::to_string(n) + ": " + lr.diagnostic);
    if (!lr.contains(lambda))
        throw ParamOutOfRange("lambda = " + std::to_string(lambda) +
                              " outside the admissible open interval");
    const double pd = p, nd = n, l = lambda;
    if (l <= (pd + nd) / pd)
        return (2.0 * (1.0 - pd) * l * l + (4.0 + nd) * l + (2.0 - 2.0 * pd - nd)) /
               (2.0 * (l + 1.0));
    return (2.0 * (1.0 - pd) * l * l + nd * l + (-2.0 + 2.0 * pd + nd)) /
           (2.0 * (l - 1.0));
}

double hypothesis_bound(const TheoremParams& params) {
    params.validate();
    switch (params.theorem) {
        case Theorem::T21: return bound_t21(params.p, params.n, params.alpha);
        case Theorem::T22: return bound_t22(params.p, params.n, params.alpha);
        case Theorem::T23A:
            return bound_t23(T23Kind::A, params.p, params.n, params.alpha, params.beta, params.gamma);
        case Theorem::T23B:
            return bound_t23(T23Kind::B, params.p, params.n, params.alpha, params.beta, params.gamma);
        case Theorem::T24: return bound_t24(params.p, params.n, params.lambda);
    }
    throw ParamOutOfRange("unknown theorem");
}

double conclusion_threshold(const TheoremParams& params) {
    switch (params.theorem) {
        case Theorem::T21:
        case Theorem::T23A: return (1.0 + params.alpha) / 2.0;
        case Theorem::T22: return 1.0 + params.alpha;
        case Theorem::T23B: return 1.0 - params.alpha;
        case Theorem::T24: return params.lambda / (params.lambda + 1.0);
    }
    throw ParamOutOfRange("unknown theorem");
}

bool hypothesis_is_lower_bound(Theorem t) { return t == Theorem::T21; }

double theta_expression(const TheoremParams& params, double m, double theta) {
    const double pd = params.p;
    const double c = std::cos(theta);
    switch (params.theorem) {
        case Theorem::T21: {
            const double a = params.alpha;
            const double den = 1.0 + a * a + 2.0 * a * c;
            if (std::abs(den) < kSingularFloor)
                throw SingularTheta("T21 boundary expression singular at cos(theta) = " +
                                    std::to_string(c));
            return pd + a * m * (a + c) / den - m / 2.0;
        }
        case Theorem::T22: {
            const double u = 1.0 + params.alpha;
            const double den = 1.0 + u * u + 2.0 * u * c;
            if (std::abs(den) < kSingularFloor)
                throw SingularTheta("T22 boundary expression singular at cos(theta) = " +
                                    std::to_string(c));
            return pd + m * u * (u + c) / den;
        }
        case Theorem::T23A: {
            const double den = 2.0 + 2.0 * c;
            if (std::abs(den) < kSingularFloor)
                throw SingularTheta("T23A boundary expression singular at cos(theta) = -1");
            return std::pow(pd, params.gamma) * std::pow(m, params.gamma) *
                   std::pow(1.0 - params.alpha, params.beta + params.gamma) /
                   std::pow(den, (params.beta + 2.0 * params.gamma) / 2.0);
        }
        case Theorem::T24: {
            const double l = params.lambda;
            const double den = l * l + 1.0 - 2.0 * l * c;
            if (std::abs(den) < kSingularFloor)
                throw SingularTheta("T24 boundary expression singular at cos(theta) = " +
                                    std::to_string(c));
            return (l + 1.0) * (2.0 - pd) / 2.0 +
                   (l * l - 1.0) * ((pd + m) - pd * l) / (2.0 * den);
        }
        case Theorem::T23B:
            throw ParamOutOfRange("T23B has no theta-dependent boundary expression");
    }
    throw ParamOutOfRange("unknown theorem");
}

double theta_oracle(const TheoremParams& params, double m, long theta_samples, long* excluded) {
    params.validate();
    require(m >= params.n, "oracle requires m >= n");
    require(theta_samples >= kMinThetaSamples,
            "oracle requires at least " + std::to_string(kMinThetaSamples) + " theta samples");

    const bool maximize = hypothesis_is_lower_bound(params.theorem);
    double best = maximize ? -std::numeric_limits<double>::infinity()
                           : std::numeric_limits<double>::infinity();
    long skipped = 0;
    long valid = 0;
    for (long j = 0; j < theta_samples; ++j) {
        const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(theta_samples);
        double v;
        try {
            v = theta_expression(params, m, theta);
        } catch (const SingularTheta&) {
            ++skipped;
            continue;
        }
        ++valid;
        if (maximize ? (v > best) : (v < best)) best = v;
    }
    if (excluded) *excluded = skipped;
    if (valid == 0) throw SingularTheta("every theta sample was singular");
    return best;
}

CriterionEvaluators::CriterionEvaluators(const TheoremParams& params, const FunctionSpec& f)
    : thm_(params.theorem), p_(f.p),
      beta_(params.beta), gamma_(params.gamma), lambda_(params.lambda) {
    if (params.p != f.p || params.n != f.n)
        throw ParamOutOfRange("theorem parameters (p = " + std::to_string(params.p) +
                              ", n = " + std::to_string(params.n) +
                              ") do not match the function (p = " + std::to_string(f.p) +
                              ", n = " + std::to_string(f.n) + ")");

    const PowerSeries& c = f.coeffs;
    deriv_ = c.derivative();                     // k c_k at k-1
    convexity_numer_ = deriv_;
    deriv_centered_ = deriv_;
    mixed_second_ = PowerSeries(c.lowest_index(),
                                std::vector<Complex>(static_cast<std::size_t>(
                                    c.truncation_order() - c.lowest_index() + 1)));
    for (int k = c.lowest_index(); k <= c.truncation_order(); ++k) {
        const double kd = k;
        convexity_numer_.set_coeff(k - 1, kd * kd * c.coeff(k));
        mixed_second_.set_coeff(k, kd * (kd - p_) * c.coeff(k));
    }
    deriv_centered_.set_coeff(p_ - 1, deriv_.coeff(p_ - 1) - Complex(static_cast<double>(p_)));

    if (thm_ == Theorem::T24) {
        zfprime_ = PowerSeries(c.lowest_index(),
                               std::vector<Complex>(static_cast<std::size_t>(
                                   c.truncation_order() - c.lowest_index() + 1)));
        for (int k = c.lowest_index(); k <= c.truncation_order(); ++k)
            zfprime_.set_coeff(k, static_cast<double>(k) * c.coeff(k));
        f_ = c;
    }
}

double CriterionEvaluators::hyp(Complex z) const {
    switch (thm_) {
        case Theorem::T21:
        case Theorem::T22:
        case Theorem::T24:
            // Re(1 + z f''/f') = Re((f' + z f'')/f'); numerator series has
            // coefficients k^2 c_k at index k-1, shared shift p-1.
            return quotient_eval(convexity_numer_, deriv_, p_ - 1, z).real();
        case Theorem::T23A:
        case Theorem::T23B: {
            // |f'/(p z^(p-1)) - 1|^beta * |f''/z^(p-2) - (p-1) f'/z^(p-1)|^gamma.
            const double first =
                std::abs(deriv_centered_.eval_shifted(p_ - 1, z)) / static_cast<double>(p_);
            const double second = std::abs(mixed_second_.eval_shifted(p_, z));
            return std::pow(first, beta_) * std::pow(second, gamma_);
        }
    }
    throw ParamOutOfRange("unknown theorem");
}

double CriterionEvaluators::concl(Complex z) const {
    switch (thm_) {
        case Theorem::T21:
        case Theorem::T23A:
            // Re(f'/(p z^(p-1))).
            return deriv_.eval_shifted(p_ - 1, z).real() / static_cast<double>(p_);
        case Theorem::T22:
        case Theorem::T23B:
            // |f'/(p z^(p-1)) - 1|.
            return std::abs(deriv_centered_.eval_shifted(p_ - 1, z)) / static_cast<double>(p_);
        case Theorem::T24: {
            // Distance of (1/p) z f'/f to the center of the target disk.
            const Complex v = quotient_eval(zfprime_, f_, p_, z) / static_cast<double>(p_);
            return std::abs(v - Complex(lambda_ / (lambda_ + 1.0)));
        }
    }
    throw ParamOutOfRange("unknown theorem");
}

RealEvaluator CriterionEvaluators::hyp_fn() const {
    return [self = *this](Complex z) { return self.hyp(z); };
}

RealEvaluator CriterionEvaluators::concl_fn() const {
    return [self = *this](Complex z) { return self.concl(z); };
}

int CriterionEvaluators::derivative_winding(double r, int M, double tol) const {
    try {
        return winding_number([this](Complex z) { return deriv_.eval_shifted(0, z); },
                              r, M, tol);
    } catch (const ZeroOnContour& e) {
        throw DenominatorVanishes(
            std::string("convexity quotient denominator f' vanishes on the sampling circle: ") +
            e.what());
    }
}

double hyp_value(const TheoremParams& params, const FunctionSpec& f, Complex z) {
    params.validate();
    return CriterionEvaluators(params, f).hyp(z);
}

double concl_value(const TheoremParams& params, const FunctionSpec& f, Complex z) {
    params.validate();
    return CriterionEvaluators(params, f).concl(z);
}

} // namespace gftv
