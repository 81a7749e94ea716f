#include "gftv/verifier.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "gftv/parallel.hpp"

namespace gftv {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kResidualTol = 1e-4;
constexpr double kConvexityTol = 1e-3;
constexpr int kTangencyRounds = 3;
constexpr int kTangencyFactor = 8;

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

Status classify(double hyp_margin, double concl_margin, double tol) {
    if (hyp_margin > tol && concl_margin > tol) return Status::BothHold;
    if (hyp_margin < -tol) return Status::Vacuous;
    if (hyp_margin > tol && concl_margin < -tol) return Status::Violation;
    return Status::Inconclusive;
}

struct HypothesisMargin {
    double value = 0.0;
    std::string note; // nonempty when the winding certificate failed
};

// Hypothesis margin of f on the outermost circle, positive = holds.  The
// convexity quantity Re(1 + z f''/f') is harmonic only where f' != 0, so
// for T21/T22/T24 the circle sweep certifies the disk-wide bound only
// after f' is certified zero-free inside (winding p-1): near an interior
// derivative zero the quantity is unbounded below and above, the
// hypothesis fails there regardless of the sweep, and the margin is -inf.
// The T23 product is log-subharmonic, so its sup needs no certificate.
HypothesisMargin hypothesis_margin(const CriterionEvaluators& ev, const TheoremParams& params,
                                   const GridSpec& grid) {
    const double bound = hypothesis_bound(params);
    const double r = grid.outer_radius();
    if (params.theorem != Theorem::T23A && params.theorem != Theorem::T23B) {
        const int w = ev.derivative_winding(r, grid.angular_count, grid.tol);
        if (w != params.p - 1)
            return {-std::numeric_limits<double>::infinity(),
                    "derivative has " + std::to_string(w - (params.p - 1)) +
                        " zero(s) strictly inside |z| = " + format_g(r) +
                        "; the convexity quantity is unbounded there and the hypothesis fails"};
    }
    if (hypothesis_is_lower_bound(params.theorem))
        return {inf_on_circle(ev.hyp_fn(), r, grid.angular_count) - bound, ""};
    return {bound - sup_on_circle(ev.hyp_fn(), r, grid.angular_count), ""};
}

// Conclusion margin of f on the outermost circle, positive = holds.
double conclusion_margin(const CriterionEvaluators& ev, const FunctionSpec& f,
                         const TheoremParams& params, const GridSpec& grid) {
    const double thr = conclusion_threshold(params);
    const double r = grid.outer_radius();
    switch (params.theorem) {
        case Theorem::T21:
        case Theorem::T23A:
            return inf_on_circle(ev.concl_fn(), r, grid.angular_count) - thr;
        case Theorem::T22:
        case Theorem::T23B:
            return thr - sup_on_circle(ev.concl_fn(), r, grid.angular_count);
        case Theorem::T24:
            return disk_inequality_margin(f, params.lambda, grid);
    }
    throw ParamOutOfRange("unknown theorem");
}

} // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::BothHold: return "BOTH_HOLD";
        case Status::Vacuous: return "VACUOUS";
        case Status::Violation: return "VIOLATION";
        case Status::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

VerificationReport verify_implication(const FunctionSpec& f, const TheoremParams& params,
                                      const GridSpec& grid, const std::string& id) {
    params.validate();
    grid.validate();
    if (params.p != f.p || params.n != f.n)
        throw ParamOutOfRange("function (p, n) = (" + std::to_string(f.p) + ", " +
                              std::to_string(f.n) + ") does not match parameters (" +
                              std::to_string(params.p) + ", " + std::to_string(params.n) + ")");

    VerificationReport rep;
    rep.id = id;
    rep.params = params;
    rep.radius = grid.outer_radius();
    rep.samples = grid.angular_count;
    rep.tol = grid.tol;
    rep.note = params.regime_note();
    rep.tail = tail_bound(f, rep.radius);

    try {
        const CriterionEvaluators ev(params, f);
        const HypothesisMargin hyp = hypothesis_margin(ev, params, grid);
        rep.hyp_margin = hyp.value;
        if (!hyp.note.empty()) {
            if (!rep.note.empty()) rep.note += "; ";
            rep.note += hyp.note;
        }
        rep.concl_margin = conclusion_margin(ev, f, params, grid);
        rep.status = classify(rep.hyp_margin, rep.concl_margin, grid.tol);
        if (rep.status == Status::Violation) {
            // A strict-inequality failure this close to the noise floor is
            // not trustworthy at the configured tolerance.
            const double floor10 = 10.0 * grid.tol;
            if (std::abs(rep.concl_margin) <= floor10 || rep.hyp_margin <= floor10) {
                rep.status = Status::Inconclusive;
                if (!rep.note.empty()) rep.note += "; ";
                rep.note += "violation within 10*tol of the strict boundary; downgraded";
            }
        }
    } catch (const Error& e) {
        rep.status = Status::Inconclusive;
        if (!rep.note.empty()) rep.note += "; ";
        rep.note += e.what();
    }
    return rep;
}

CorpusRunReport run_corpus(const std::vector<CorpusEntry>& corpus, const TheoremParams& params,
                           const GridSpec& grid) {
    params.validate();
    grid.validate();
    for (const CorpusEntry& e : corpus)
        if (e.function.p != params.p || e.function.n != params.n)
            throw ParamOutOfRange("corpus entry '" + e.id + "' has (p, n) = (" +
                                  std::to_string(e.function.p) + ", " +
                                  std::to_string(e.function.n) +
                                  "), parameters expect (" + std::to_string(params.p) + ", " +
                                  std::to_string(params.n) + ")");

    CorpusRunReport out;
    out.params = params;
    out.reports.resize(corpus.size());
    parallel_for(corpus.size(), [&](std::size_t i) {
        out.reports[i] = verify_implication(corpus[i].function, params, grid, corpus[i].id);
    });
    for (const VerificationReport& r : out.reports) {
        switch (r.status) {
            case Status::BothHold: ++out.both_hold; break;
            case Status::Vacuous: ++out.vacuous; break;
            case Status::Violation: ++out.violation; break;
            case Status::Inconclusive: ++out.inconclusive; break;
        }
    }
    return out;
}

SearchOutcome search_counterexample(const TheoremParams& params, const SearchOptions& opts,
                                    const GridSpec& grid) {
    params.validate();
    grid.validate();
    if (opts.delta < 0.0) throw ParamOutOfRange("delta must be >= 0");
    if (opts.trials < 0) throw ParamOutOfRange("trials must be >= 0");

    const int degree = opts.degree > 0 ? opts.degree : params.p + params.n + 5;
    const bool strict = opts.delta == 0.0;

    SearchOutcome out;
    out.attempted = opts.trials;

    struct Trial {
        bool accepted = false;
        bool candidate = false;
    };
    std::vector<Trial> trials(static_cast<std::size_t>(opts.trials));

    // Trial i draws from its own derived seed, so acceptance is a pure
    // function of (seed, i) no matter how trials are scheduled.
    auto trial_seed = [&](long i) {
        // splitmix64 over seed ^ golden-ratio-scrambled index
        std::uint64_t x = opts.seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(i) + 1);
        x ^= x >> 30; x *= 0xBF58476D1CE4E5B9ull;
        x ^= x >> 27; x *= 0x94D049BB133111EBull;
        x ^= x >> 31;
        return x;
    };

    auto make_trial_function = [&](long i) {
        return random_polynomial(params.p, params.n, degree, opts.scale, trial_seed(i),
                                 CoeffMode::Aggressive);
    };

    parallel_for(trials.size(), [&](std::size_t i) {
        const FunctionSpec f = make_trial_function(static_cast<long>(i));
        double hyp = 0.0, concl = 0.0;
        try {
            const CriterionEvaluators ev(params, f);
            hyp = hypothesis_margin(ev, params, grid).value;
            const bool accept = strict ? (hyp > grid.tol)
                                       : (hyp > -opts.delta && hyp <= 0.0);
            if (!accept) return;
            trials[i].accepted = true;
            concl = conclusion_margin(ev, f, params, grid);
        } catch (const Error&) {
            return; // evaluation failures are simply not candidates
        }
        if (concl < -grid.tol) trials[i].candidate = true;
    });

    for (std::size_t i = 0; i < trials.size(); ++i) {
        if (trials[i].accepted) ++out.accepted;
        if (!trials[i].candidate) continue;
        const FunctionSpec f = make_trial_function(static_cast<long>(i));
        CorpusEntry witness;
        witness.id = "search-" + std::to_string(opts.seed) + "-" + std::to_string(i);
        witness.function = f;
        witness.provenance = "search trial " + std::to_string(i) + " seed " +
                             std::to_string(opts.seed) + " scale " + format_g(opts.scale) +
                             " degree " + std::to_string(degree);
        const VerificationReport rep = verify_implication(f, params, grid, witness.id);
        const bool confirmed = strict ? rep.status == Status::Violation
                                      : (rep.concl_margin < -grid.tol &&
                                         rep.hyp_margin > -opts.delta && rep.hyp_margin <= 0.0);
        if (!confirmed) continue; // failed re-verification: discard
        out.found = true;
        out.trial_index = static_cast<long>(i);
        out.witness = std::move(witness);
        out.report = rep;
        break;
    }
    return out;
}

JackReport jack_check(const TestFunction& w, double r0, int M, double tol) {
    if (!(r0 > 0.0 && r0 < 1.0)) throw ParamOutOfRange("r0 must lie in (0,1)");
    if (M < 16) throw ParamOutOfRange("angular sample count must be >= 16");
    if (w.coeffs.identically_zero())
        throw ParamOutOfRange("test function is identically zero");

    auto value = [&](double theta) {
        return w.eval({r0 * std::cos(theta), r0 * std::sin(theta)});
    };

    // Coarse argmax of |w| over the M-point grid; ties keep the first index.
    double best_theta = 0.0;
    double best_mod = -1.0;
    for (int j = 0; j < M; ++j) {
        const double theta = kTwoPi * j / M;
        const double m = std::abs(value(theta));
        if (m > best_mod) {
            best_mod = m;
            best_theta = theta;
        }
    }

    // Local 8x refinement around the incumbent, three rounds.  The center
    // stays the incumbent on ties so the located angle is deterministic.
    double h = kTwoPi / M;
    for (int round = 0; round < kTangencyRounds; ++round) {
        const double step = h / kTangencyFactor;
        for (int i = -kTangencyFactor; i <= kTangencyFactor; ++i) {
            if (i == 0) continue;
            const double theta = best_theta + step * i;
            const double m = std::abs(value(theta));
            if (m > best_mod) {
                best_mod = m;
                best_theta = theta;
            }
        }
        h = step;
    }

    if (best_mod <= tol)
        throw DegenerateMax("max |w| = " + std::to_string(best_mod) + " on r0 = " +
                            std::to_string(r0) + " is below tolerance");

    const Complex z0{r0 * std::cos(best_theta), r0 * std::sin(best_theta)};
    const PowerSeries d1 = w.coeffs.derivative();
    const PowerSeries d2 = d1.derivative();

    JackReport rep;
    rep.r0 = r0;
    rep.z0 = z0;
    rep.order = w.order;

    const Complex w0 = w.eval(z0);
    const Complex w1 = d1.eval_shifted(0, z0);
    const Complex w2 = d2.eval_shifted(0, z0);
    rep.m_estimate = z0 * w1 / w0;
    rep.residual = std::abs(rep.m_estimate.imag());
    if (std::abs(w1) <= kDenominatorFloor)
        throw DenominatorVanishes("w' vanishes at the located boundary maximum");
    rep.convexity_value = (z0 * w2 / w1).real() + 1.0;

    rep.re_m_ok = rep.m_estimate.real() >= static_cast<double>(w.order) - kResidualTol;
    rep.residual_ok = rep.residual <= kResidualTol;
    rep.convexity_ok = rep.convexity_value >= rep.m_estimate.real() - kConvexityTol;
    return rep;
}

std::string to_record(const VerificationReport& r) {
    std::ostringstream os;
    os << "report id=" << (r.id.empty() ? "-" : r.id)
       << " theorem=" << theorem_name(r.params.theorem)
       << " p=" << r.params.p << " n=" << r.params.n
       << " alpha=" << format_g(r.params.alpha)
       << " beta=" << format_g(r.params.beta)
       << " gamma=" << format_g(r.params.gamma)
       << " lambda=" << format_g(r.params.lambda)
       << " radius=" << format_g(r.radius)
       << " M=" << r.samples
       << " tol=" << format_g(r.tol)
       << " hyp_margin=" << format_g17(r.hyp_margin)
       << " concl_margin=" << format_g17(r.concl_margin)
       << " tail=" << format_g17(r.tail)
       << " status=" << status_name(r.status);
    if (!r.note.empty()) os << " note=" << r.note;
    return os.str();
}

std::string to_summary_record(const CorpusRunReport& r) {
    std::ostringstream os;
    os << "summary theorem=" << theorem_name(r.params.theorem)
       << " p=" << r.params.p << " n=" << r.params.n
       << " alpha=" << format_g(r.params.alpha)
       << " beta=" << format_g(r.params.beta)
       << " gamma=" << format_g(r.params.gamma)
       << " lambda=" << format_g(r.params.lambda)
       << " total=" << r.reports.size()
       << " both_hold=" << r.both_hold
       << " vacuous=" << r.vacuous
       << " violation=" << r.violation
       << " inconclusive=" << r.inconclusive;
    return os.str();
}

} // namespace gftv
