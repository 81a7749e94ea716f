#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gftv/disk.hpp"
#include "gftv/series.hpp"

namespace gftv {

// The five implemented criterion families.  T21 and T24 bound the
// convexity-type quantity Re(1 + z f''/f') from below resp. above; T22
// bounds it from above with a different constant; T23A/T23B bound a mixed
// product of normalized derivative deviations.
enum class Theorem { T21, T22, T23A, T23B, T24 };

std::string theorem_name(Theorem t);
std::optional<Theorem> theorem_from_name(std::string_view name); // accepts "t21", "T23a", ...

struct TheoremParams {
    Theorem theorem = Theorem::T21;
    int p = 1;
    int n = 1;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double lambda = 0.0;

    void validate() const; // throws ParamOutOfRange

    // Nonempty when the parameters are admitted but lie outside the
    // regime the criterion family is stated for (T23B with alpha
    // outside [0,1)).  Attached verbatim to verification reports.
    std::string regime_note() const;
};

// Admissible lambda interval for the T24 family at a given (p, n).
struct LambdaRange {
    double lambda1 = 0.0;
    double lambda2 = 0.0; // +infinity when unbounded above
    bool unbounded = false;
    bool valid = false;
    std::string diagnostic; // why the range is empty, when !valid

    bool contains(double lambda) const; // strict interior membership
};

// Closed-form hypothesis constants.
double bound_t21(int p, int n, double alpha);                 // 0 <= alpha < 1
double bound_t22(int p, int n, double alpha);                 // alpha >= 0
enum class T23Kind { A, B };
double bound_t23(T23Kind kind, int p, int n, double alpha, double beta, double gamma);
LambdaRange lambda_range(int p, int n);
double bound_t24(int p, int n, double lambda);                // lambda strictly inside the range

double hypothesis_bound(const TheoremParams& params);         // dispatches to the above
double conclusion_threshold(const TheoremParams& params);     // (1+a)/2, 1+a, 1-a, l/(l+1)

// Whether the criterion's hypothesis bounds its quantity from below
// (T21: Re > bound) or from above (all others: value < bound).
bool hypothesis_is_lower_bound(Theorem t);

// Boundary expression from the tangency argument, as a function of theta,
// at vanishing-order parameter m >= n.  Throws SingularTheta where the
// expression degenerates (denominator below 1e-12); those angles are
// excluded grid samples, consistent with the extremum lying at theta = 0
// or pi.  T23B has no theta dependence and is rejected.
double theta_expression(const TheoremParams& params, double m, double theta);

// Extremum of theta_expression over the uniform theta grid (maximum for
// T21, minimum otherwise), skipping excluded singular samples.
// theta_samples >= 1000; excluded-out reports how many samples were skipped.
double theta_oracle(const TheoremParams& params, double m, long theta_samples,
                    long* excluded = nullptr);

// Pointwise hypothesis / conclusion quantities for a concrete function.
// Hypothesis: Re(1 + z f''/f') for T21/T22/T24; the mixed derivative
// product for T23A/T23B.  Conclusion: Re(f'/(p z^(p-1))) for T21/T23A;
// |f'/(p z^(p-1)) - 1| for T22/T23B; distance of (1/p) z f'/f to the
// target disk center for T24.
double hyp_value(const TheoremParams& params, const FunctionSpec& f, Complex z);
double concl_value(const TheoremParams& params, const FunctionSpec& f, Complex z);

// Prepared per-function evaluators: derived series are built once so
// circle sweeps stay cheap.
class CriterionEvaluators {
public:
    CriterionEvaluators(const TheoremParams& params, const FunctionSpec& f);

    double hyp(Complex z) const;
    double concl(Complex z) const;

    RealEvaluator hyp_fn() const;
    RealEvaluator concl_fn() const;

    // Zero count of f' inside |z| < r.  Re(1 + z f''/f') is harmonic only
    // where f' != 0, so a circle sweep certifies a disk-wide convexity
    // bound only when this equals p-1 (the forced origin zero alone).  A
    // derivative zero on the circle itself raises DenominatorVanishes;
    // unresolvable phase jumps raise UnstableWinding.
    int derivative_winding(double r, int M, double tol) const;

private:
    Theorem thm_;
    int p_;
    double beta_ = 0.0, gamma_ = 0.0, lambda_ = 0.0;
    PowerSeries convexity_numer_; // sum k^2 c_k z^(k-1)
    PowerSeries deriv_;           // f' = sum k c_k z^(k-1)
    PowerSeries deriv_centered_;  // f' - p z^(p-1)
    PowerSeries mixed_second_;    // sum k (k-p) c_k z^k
    PowerSeries zfprime_;         // z f'
    PowerSeries f_;               // f itself
};

} // namespace gftv
