#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gftv/corpus.hpp"
#include "gftv/criteria.hpp"
#include "gftv/disk.hpp"
#include "gftv/subordination.hpp"

namespace gftv {

// Outcome of checking one implication on one function.  Margins are
// oriented so that positive means the side holds strictly:
//   BOTH_HOLD      hypothesis and conclusion hold (margins > tol)
//   VACUOUS        hypothesis fails (hyp margin < -tol)
//   VIOLATION      hypothesis holds but the conclusion fails
//   INCONCLUSIVE   a margin is within tol of zero, an evaluation error
//                  occurred, or a violation sits too close to the noise
//                  floor to trust (|margin| <= 10 tol: downgraded)
enum class Status { BothHold, Vacuous, Violation, Inconclusive };

std::string status_name(Status s);

struct VerificationReport {
    std::string id;
    TheoremParams params;
    double radius = 0.0;   // outermost sampling radius
    int samples = 0;       // angular sample count
    double tol = 0.0;
    double hyp_margin = 0.0;
    double concl_margin = 0.0;
    Status status = Status::Inconclusive;
    double tail = 0.0;     // truncation tail bound at `radius` (0 if exact)
    std::string note;      // error text, downgrade warning, or regime note
};

// Sweeps both sides of the implication on the outermost circle.  Margins:
//   hypothesis  inf Re - bound        (T21)            bound - sup       (others)
//   conclusion  inf Re - threshold    (T21/T23A)       threshold - sup   (T22/T23B)
//               disk-inequality margin                 (T24)
// Boundary sweeps certify disk-wide convexity bounds only where the
// quantity is harmonic, so for T21/T22/T24 the hypothesis side first
// certifies f' zero-free inside the outer circle (derivative winding
// p-1).  When that fails the hypothesis margin is reported as -inf with
// an explanatory note and the status is VACUOUS.  Evaluation errors
// (vanishing denominators, contour zeros, unstable winding, extra zeros)
// are recorded in the report, not thrown.
VerificationReport verify_implication(const FunctionSpec& f, const TheoremParams& params,
                                      const GridSpec& grid, const std::string& id = "");

struct CorpusRunReport {
    TheoremParams params;
    std::vector<VerificationReport> reports; // corpus order
    int both_hold = 0;
    int vacuous = 0;
    int violation = 0;
    int inconclusive = 0;
};

// Verifies every entry (in parallel across the thread budget; reports are
// aggregated in corpus order).  All entries must match params' (p, n).
CorpusRunReport run_corpus(const std::vector<CorpusEntry>& corpus, const TheoremParams& params,
                           const GridSpec& grid);

struct SearchOptions {
    double delta = 0.0;      // accept hyp margins in (-delta, 0]; 0 = strict mode
    std::uint64_t seed = 0;
    long trials = 0;
    double scale = 0.4;      // aggressive draw cap
    int degree = 0;          // 0 = p + n + 5
};

struct SearchOutcome {
    bool found = false;
    long trial_index = -1;   // smallest accepting index when found
    CorpusEntry witness;
    VerificationReport report; // re-verification of the witness
    long attempted = 0;
    long accepted = 0;       // trials passing the margin filter
};

// Seeded random search for conclusion failures.  In boundary mode
// (delta > 0) a trial is accepted when its hypothesis margin lies in
// (-delta, 0]; in strict mode (delta = 0) when the hypothesis holds
// (margin > tol).  A candidate whose conclusion margin is < -tol is
// re-verified with verify_implication before being returned; candidates
// failing re-verification are discarded.  Trial i derives its own seed
// from (seed, i), so the returned index is execution-order independent.
SearchOutcome search_counterexample(const TheoremParams& params, const SearchOptions& opts,
                                    const GridSpec& grid);

// Boundary-tangency check: locates the maximum of |w| on |z| = r0 by a
// coarse scan plus three 8x refinement rounds, then reports the
// logarithmic-derivative value at the located point.
struct JackReport {
    double r0 = 0.0;
    Complex z0;
    Complex m_estimate;          // z0 w'(z0) / w(z0)
    int order = 0;
    double residual = 0.0;       // |Im m_estimate|
    double convexity_value = 0.0;// Re(z0 w''(z0)/w'(z0)) + 1
    bool re_m_ok = false;        // Re m >= order - 1e-4
    bool residual_ok = false;    // residual <= 1e-4
    bool convexity_ok = false;   // convexity_value >= Re m - 1e-3
};

JackReport jack_check(const TestFunction& w, double r0, int M, double tol = 1e-9);

// Stable single-line record formats (documented in the README).
std::string to_record(const VerificationReport& r);
std::string to_summary_record(const CorpusRunReport& r);

} // namespace gftv
