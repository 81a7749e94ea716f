#include "gftv/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gftv/corpus.hpp"
#include "gftv/criteria.hpp"
#include "gftv/subordination.hpp"
#include "gftv/verifier.hpp"

namespace gftv {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitViolation = 2;
constexpr int kExitUsage = 64;

constexpr double kOracleTol = 1e-6;

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// --- shared flag bundles -------------------------------------------------

struct ParamFlags {
    std::string theorem;
    int p = 1;
    int n = 1;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double lambda = 0.0;
};

struct GridFlags {
    std::vector<double> radii{0.9, 0.99, 0.999};
    int samples = 4096;
    double tol = 1e-9;
};

struct SourceFlags {
    std::string corpus_path;
    std::string entry_id;
    std::string classical;
    std::string coeffs;
    int N = kDefaultTruncation;
};

void add_param_flags(CLI::App* sub, ParamFlags& pf, bool need_theorem) {
    auto* t = sub->add_option("--theorem", pf.theorem,
                              "criterion family: t21, t22, t23a, t23b, t24");
    if (need_theorem) t->required();
    sub->add_option("--p", pf.p, "valence p >= 1 (default 1)");
    sub->add_option("--n", pf.n, "gap order n >= 1 (default 1)");
    sub->add_option("--alpha", pf.alpha, "order parameter alpha (default 0)");
    sub->add_option("--beta", pf.beta, "first product exponent, >= 0 (default 0)");
    sub->add_option("--gamma", pf.gamma, "second product exponent, >= 0 (default 0)");
    sub->add_option("--lambda", pf.lambda, "target-map parameter lambda");
}

void add_grid_flags(CLI::App* sub, GridFlags& gf) {
    sub->add_option("--radii", gf.radii,
                    "sampling radii, ascending in (0,1) (default 0.9,0.99,0.999)")
        ->delimiter(',');
    sub->add_option("--samples", gf.samples, "angular samples per circle, >= 16 (default 4096)");
    sub->add_option("--tol", gf.tol, "strictness tolerance (default 1e-9)");
}

void add_source_flags(CLI::App* sub, SourceFlags& sf) {
    sub->add_option("--corpus", sf.corpus_path, "corpus file to read functions from");
    sub->add_option("--id", sf.entry_id, "entry id inside --corpus");
    sub->add_option("--function", sf.classical,
                    "classical function: identity, half-plane, monomial-pair(c)");
    sub->add_option("--coeffs", sf.coeffs,
                    "inline coefficients 'k:re[:im],...' combined with --p/--n/--N");
    sub->add_option("--N", sf.N, "truncation order for constructed functions (default 64)");
}

Theorem parse_theorem(const std::string& name) {
    const auto t = theorem_from_name(name);
    if (!t) throw ParamOutOfRange("unknown theorem '" + name + "'");
    return *t;
}

TheoremParams build_params(const ParamFlags& pf) {
    TheoremParams params;
    params.theorem = parse_theorem(pf.theorem);
    params.p = pf.p;
    params.n = pf.n;
    params.alpha = pf.alpha;
    params.beta = pf.beta;
    params.gamma = pf.gamma;
    params.lambda = pf.lambda;
    params.validate();
    return params;
}

GridSpec build_grid(const GridFlags& gf) {
    GridSpec grid;
    grid.radii = gf.radii;
    grid.angular_count = gf.samples;
    grid.tol = gf.tol;
    grid.validate();
    return grid;
}

std::map<int, Complex> parse_coeff_list(const std::string& text) {
    std::map<int, Complex> cs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::stringstream fs(item);
        std::string kf, ref, imf;
        std::getline(fs, kf, ':');
        std::getline(fs, ref, ':');
        std::getline(fs, imf, ':');
        try {
            const int k = std::stoi(kf);
            const double re = ref.empty() ? 0.0 : std::stod(ref);
            const double im = imf.empty() ? 0.0 : std::stod(imf);
            cs[k] = Complex(re, im);
        } catch (const std::exception&) {
            throw ParamOutOfRange("unparseable --coeffs item '" + item +
                                  "' (expected k:re[:im])");
        }
    }
    return cs;
}

// Functions selected by the source flags, as corpus entries (so every
// command can report an id).
std::vector<CorpusEntry> load_functions(const SourceFlags& sf, int p, int n) {
    const int given = (!sf.corpus_path.empty() ? 1 : 0) + (!sf.classical.empty() ? 1 : 0) +
                      (!sf.coeffs.empty() ? 1 : 0);
    if (given != 1)
        throw ParamOutOfRange("choose exactly one of --corpus, --function, --coeffs");

    if (!sf.corpus_path.empty()) {
        std::vector<CorpusEntry> all = load_corpus(sf.corpus_path);
        if (sf.entry_id.empty()) return all;
        for (CorpusEntry& e : all)
            if (e.id == sf.entry_id) return {std::move(e)};
        throw ParamOutOfRange("no entry with id '" + sf.entry_id + "' in " + sf.corpus_path);
    }
    if (!sf.classical.empty()) {
        CorpusEntry e;
        e.id = sf.classical;
        e.function = classical_function(sf.classical, p, n, sf.N);
        e.provenance = "classical " + sf.classical;
        return {std::move(e)};
    }
    CorpusEntry e;
    e.id = "inline";
    e.function = make_function(p, n, parse_coeff_list(sf.coeffs), sf.N);
    e.provenance = "inline coefficients";
    return {std::move(e)};
}

void print_report_table(std::ostream& os, const VerificationReport& r) {
    os << "id           = " << (r.id.empty() ? "-" : r.id) << "\n"
       << "theorem      = " << theorem_name(r.params.theorem) << "\n"
       << "radius       = " << r.radius << "  (M = " << r.samples << ", tol = " << r.tol
       << ")\n"
       << "hyp_margin   = " << g17(r.hyp_margin) << "\n"
       << "concl_margin = " << g17(r.concl_margin) << "\n";
    if (r.tail > 0.0) os << "tail_bound   = " << g17(r.tail) << "\n";
    os << "status       = " << status_name(r.status) << "\n";
    if (!r.note.empty()) os << "note         = " << r.note << "\n";
}

// --- subcommand drivers ----------------------------------------------------

int cmd_bounds(const ParamFlags& pf, bool lambda_given) {
    auto print_range = [](const LambdaRange& lr) {
        std::cout << "lambda1=" << g17(lr.lambda1) << " lambda2="
                  << (lr.unbounded ? std::string("unbounded") : g17(lr.lambda2)) << "\n";
    };

    if (!pf.theorem.empty()) {
        const Theorem t = parse_theorem(pf.theorem);
        switch (t) {
            case Theorem::T21:
                std::cout << g17(bound_t21(pf.p, pf.n, pf.alpha)) << "\n";
                return kExitOk;
            case Theorem::T22:
                std::cout << g17(bound_t22(pf.p, pf.n, pf.alpha)) << "\n";
                return kExitOk;
            case Theorem::T23A:
                std::cout << g17(bound_t23(T23Kind::A, pf.p, pf.n, pf.alpha, pf.beta, pf.gamma))
                          << "\n";
                return kExitOk;
            case Theorem::T23B:
                std::cout << g17(bound_t23(T23Kind::B, pf.p, pf.n, pf.alpha, pf.beta, pf.gamma))
                          << "\n";
                return kExitOk;
            case Theorem::T24: {
                const LambdaRange lr = lambda_range(pf.p, pf.n);
                if (!lr.valid)
                    throw ParamOutOfRange("lambda range invalid for p = " + std::to_string(pf.p) +
                                          ", n = " + std::to_string(pf.n) + ": " + lr.diagnostic);
                if (!lambda_given) {
                    print_range(lr);
                    return kExitOk;
                }
                std::cout << g17(bound_t24(pf.p, pf.n, pf.lambda)) << "\n";
                return kExitOk;
            }
        }
    }

    // No theorem selected: print every constant derivable from the flags.
    std::cout << "T21 " << g17(bound_t21(pf.p, pf.n, pf.alpha)) << "\n";
    std::cout << "T22 " << g17(bound_t22(pf.p, pf.n, pf.alpha)) << "\n";
    if (pf.beta + pf.gamma > 0.0) {
        std::cout << "T23A " << g17(bound_t23(T23Kind::A, pf.p, pf.n, pf.alpha, pf.beta, pf.gamma))
                  << "\n";
        std::cout << "T23B " << g17(bound_t23(T23Kind::B, pf.p, pf.n, pf.alpha, pf.beta, pf.gamma))
                  << "\n";
    }
    const LambdaRange lr = lambda_range(pf.p, pf.n);
    if (!lr.valid) {
        std::cout << "T24 lambda range invalid: " << lr.diagnostic << "\n";
    } else {
        std::cout << "T24 ";
        print_range(lr);
        if (lambda_given && lr.contains(pf.lambda))
            std::cout << "T24 " << g17(bound_t24(pf.p, pf.n, pf.lambda)) << "\n";
    }
    return kExitOk;
}

int cmd_oracle(const ParamFlags& pf, double m, bool m_given, long theta_samples) {
    const TheoremParams params = build_params(pf);
    if (!m_given) m = params.n;

    long excluded = 0;
    const double grid_value = theta_oracle(params, m, theta_samples, &excluded);
    const double closed_form = hypothesis_bound(params);
    const double diff = std::abs(grid_value - closed_form);

    std::cout << "oracle theorem=" << theorem_name(params.theorem) << " p=" << params.p
              << " n=" << params.n << " m=" << m << " samples=" << theta_samples
              << " excluded=" << excluded << " grid=" << g17(grid_value)
              << " closed_form=" << g17(closed_form) << " diff=" << g17(diff) << "\n";

    if (m == static_cast<double>(params.n) && diff > kOracleTol) {
        std::cerr << "oracle mismatch: |grid - closed_form| = " << g17(diff) << " > "
                  << g17(kOracleTol) << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_verify(const ParamFlags& pf, const GridFlags& gf, const SourceFlags& sf,
               const std::string& format, bool shape_given) {
    const GridSpec grid = build_grid(gf);
    const std::vector<CorpusEntry> fns = load_functions(sf, pf.p, pf.n);
    if (fns.size() != 1)
        throw ParamOutOfRange("verify expects exactly one function; pass --id to select "
                              "one corpus entry");

    // The function fixes (p, n); explicit --p/--n must still match it
    // (verify_implication rejects mismatches), but when omitted the
    // entry's shape wins.
    ParamFlags shaped = pf;
    if (!shape_given) {
        shaped.p = fns[0].function.p;
        shaped.n = fns[0].function.n;
    }
    const TheoremParams params = build_params(shaped);

    const VerificationReport rep = verify_implication(fns[0].function, params, grid, fns[0].id);
    if (format == "records")
        std::cout << to_record(rep) << "\n";
    else
        print_report_table(std::cout, rep);
    return rep.status == Status::Violation ? kExitViolation : kExitOk;
}

int cmd_sweep(const ParamFlags& pf, const GridFlags& gf, const SourceFlags& sf,
              std::vector<double> alphas, std::vector<double> betas,
              std::vector<double> gammas, std::vector<double> lambdas,
              const std::string& out_path) {
    const Theorem thm = parse_theorem(pf.theorem);
    const GridSpec grid = build_grid(gf);
    if (sf.corpus_path.empty()) throw ParamOutOfRange("sweep requires --corpus");
    const std::vector<CorpusEntry> corpus = load_corpus(sf.corpus_path);
    if (corpus.empty()) throw ParamOutOfRange("corpus is empty");

    if (alphas.empty()) alphas.push_back(pf.alpha);
    if (betas.empty()) betas.push_back(pf.beta);
    if (gammas.empty()) gammas.push_back(pf.gamma);
    if (lambdas.empty()) lambdas.push_back(pf.lambda);

    // Canonical cell order: alpha-major, then beta, gamma, lambda.
    std::vector<TheoremParams> cells;
    for (double a : alphas)
        for (double b : betas)
            for (double g : gammas)
                for (double l : lambdas) {
                    TheoremParams params;
                    params.theorem = thm;
                    params.p = pf.p;
                    params.n = pf.n;
                    params.alpha = a;
                    params.beta = b;
                    params.gamma = g;
                    params.lambda = l;
                    params.validate();
                    cells.push_back(params);
                }

    std::ostringstream body;
    bool any_violation = false;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const CorpusRunReport run = run_corpus(corpus, cells[i], grid);
        for (const VerificationReport& r : run.reports) body << to_record(r) << "\n";
        body << to_summary_record(run) << "\n";
        any_violation = any_violation || run.violation > 0;
        std::cerr << "sweep cell " << (i + 1) << "/" << cells.size() << " done: "
                  << to_summary_record(run) << "\n";
    }

    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw ParamOutOfRange("cannot open '" + out_path + "' for writing");
        os << body.str();
    }
    return any_violation ? kExitViolation : kExitOk;
}

int cmd_search(const ParamFlags& pf, const GridFlags& gf, const SearchOptions& opts,
               const std::string& format) {
    const TheoremParams params = build_params(pf);
    const GridSpec grid = build_grid(gf);

    const SearchOutcome out = search_counterexample(params, opts, grid);
    std::cout << "search theorem=" << theorem_name(params.theorem) << " trials=" << out.attempted
              << " accepted=" << out.accepted << " found=" << (out.found ? 1 : 0) << "\n";
    if (!out.found) return kExitOk;

    if (format == "records")
        std::cout << to_record(out.report) << "\n";
    else
        print_report_table(std::cout, out.report);
    save_corpus({out.witness}, std::cout);
    return kExitViolation;
}

int cmd_valence(const GridFlags& gf, const SourceFlags& sf, int p, int n, double r) {
    if (!(r > 0.0 && r < 1.0)) throw ParamOutOfRange("--r must lie in (0,1)");
    const std::vector<CorpusEntry> fns = load_functions(sf, p, n);
    if (fns.empty()) throw ParamOutOfRange("no functions to check");

    bool all_ok = true;
    for (const CorpusEntry& e : fns) {
        int w = 0;
        std::string err;
        try {
            w = winding_number(e.function, r, gf.samples, gf.tol);
        } catch (const Error& ex) {
            err = ex.what();
        }
        const bool ok = err.empty() && w == e.function.p;
        all_ok = all_ok && ok;
        std::cout << "valence id=" << e.id << " p=" << e.function.p << " r=" << r
                  << " winding=" << (err.empty() ? std::to_string(w) : std::string("-"))
                  << " ok=" << (ok ? 1 : 0);
        if (!err.empty()) std::cout << " note=" << err;
        std::cout << "\n";
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_jack(int order, int degree, double scale, std::uint64_t seed, int count, double r0,
             int samples, const std::string& coeffs) {
    std::vector<std::pair<std::string, TestFunction>> fns;
    if (!coeffs.empty()) {
        fns.emplace_back("inline", make_test_function(order, parse_coeff_list(coeffs),
                                                      std::max(order, degree)));
    } else {
        if (degree <= 0) degree = order + 5;
        for (int i = 0; i < count; ++i) {
            const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
            fns.emplace_back("seed " + std::to_string(s),
                             random_test_function(order, degree, scale, s));
        }
    }

    bool all_ok = true;
    for (const auto& [label, w] : fns) {
        const JackReport rep = jack_check(w, r0, samples);
        const bool ok = rep.re_m_ok && rep.residual_ok && rep.convexity_ok;
        all_ok = all_ok && ok;
        std::cout << "jack order=" << rep.order << " r0=" << rep.r0 << " source=" << label
                  << " m_re=" << g17(rep.m_estimate.real()) << " residual=" << g17(rep.residual)
                  << " convexity=" << g17(rep.convexity_value) << " ok=" << (ok ? 1 : 0) << "\n";
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_gen(int count, int p, int n, int degree, double scale, std::uint64_t seed,
            const std::string& mode, const std::string& out_path) {
    CoeffMode m;
    if (mode == "decay")
        m = CoeffMode::Decay;
    else if (mode == "aggressive")
        m = CoeffMode::Aggressive;
    else
        throw ParamOutOfRange("--mode must be decay or aggressive");

    const std::vector<CorpusEntry> corpus = make_random_corpus(count, p, n, degree, scale, seed, m);
    if (out_path.empty()) {
        save_corpus(corpus, std::cout);
    } else {
        save_corpus(corpus, out_path);
        std::cerr << "wrote " << corpus.size() << " entries to " << out_path << "\n";
    }
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"numerical verifier for multivalent close-to-convexity and starlikeness criteria"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read flags from an INI file (command line wins)");

    ParamFlags pf_bounds, pf_oracle, pf_verify, pf_sweep, pf_search;
    GridFlags gf_verify, gf_sweep, gf_search, gf_valence;
    SourceFlags sf_verify, sf_sweep, sf_valence;
    std::string fmt_verify = "table", fmt_search = "table";

    auto* bounds = app.add_subcommand("bounds", "print closed-form criterion constants");
    add_param_flags(bounds, pf_bounds, false);

    auto* oracle = app.add_subcommand(
        "oracle", "compare the theta-grid boundary extremum against the closed form");
    add_param_flags(oracle, pf_oracle, true);
    double oracle_m = 0.0;
    long oracle_samples = 200000;
    oracle->add_option("--m", oracle_m, "vanishing-order parameter m >= n (default n)");
    oracle->add_option("--theta-samples", oracle_samples,
                       "theta grid size, >= 1000 (default 200000)");

    auto* verify = app.add_subcommand("verify", "check one implication on one function");
    add_param_flags(verify, pf_verify, true);
    add_grid_flags(verify, gf_verify);
    add_source_flags(verify, sf_verify);
    verify->add_option("--format", fmt_verify, "output format: table or records");

    auto* sweep = app.add_subcommand("sweep", "run a parameter grid across a corpus");
    add_param_flags(sweep, pf_sweep, true);
    add_grid_flags(sweep, gf_sweep);
    add_source_flags(sweep, sf_sweep);
    std::vector<double> sw_alphas, sw_betas, sw_gammas, sw_lambdas;
    std::string sweep_out;
    sweep->add_option("--alphas", sw_alphas, "comma-separated alpha values")->delimiter(',');
    sweep->add_option("--betas", sw_betas, "comma-separated beta values")->delimiter(',');
    sweep->add_option("--gammas", sw_gammas, "comma-separated gamma values")->delimiter(',');
    sweep->add_option("--lambdas", sw_lambdas, "comma-separated lambda values")->delimiter(',');
    sweep->add_option("--out", sweep_out, "write records to this file instead of stdout");

    auto* search = app.add_subcommand("search", "randomized counterexample search");
    add_param_flags(search, pf_search, true);
    add_grid_flags(search, gf_search);
    SearchOptions search_opts;
    search->add_option("--delta", search_opts.delta,
                       "accept hypothesis margins in (-delta, 0]; 0 = strict mode (default)");
    search->add_option("--seed", search_opts.seed, "base seed (default 0)");
    search->add_option("--trials", search_opts.trials, "number of random trials")->required();
    search->add_option("--scale", search_opts.scale, "aggressive draw cap (default 0.4)");
    search->add_option("--degree", search_opts.degree, "trial degree (default p+n+5)");
    search->add_option("--format", fmt_search, "output format: table or records");

    auto* valence = app.add_subcommand("valence", "certify the zero count via winding numbers");
    add_grid_flags(valence, gf_valence);
    add_source_flags(valence, sf_valence);
    int val_p = 1, val_n = 1;
    double val_r = 0.99;
    valence->add_option("--p", val_p, "valence for constructed functions (default 1)");
    valence->add_option("--n", val_n, "gap order for constructed functions (default 1)");
    valence->add_option("--r", val_r, "winding circle radius (default 0.99)");

    auto* jack = app.add_subcommand("jack", "boundary-tangency check for disk functions");
    int jk_order = 1, jk_degree = 0, jk_count = 1, jk_samples = 4096;
    double jk_scale = 0.5, jk_r0 = 0.9;
    std::uint64_t jk_seed = 1;
    std::string jk_coeffs;
    jack->add_option("--order", jk_order, "declared vanishing order n >= 1 (default 1)");
    jack->add_option("--degree", jk_degree, "random function degree (default order+5)");
    jack->add_option("--scale", jk_scale, "random draw cap (default 0.5)");
    jack->add_option("--seed", jk_seed, "base seed (default 1)");
    jack->add_option("--count", jk_count, "number of random functions (default 1)");
    jack->add_option("--r0", jk_r0, "boundary radius in (0,1) (default 0.9)");
    jack->add_option("--samples", jk_samples, "coarse angular samples (default 4096)");
    jack->add_option("--coeffs", jk_coeffs, "inline coefficients 'k:re[:im],...'");

    auto* gen = app.add_subcommand("gen", "generate a seeded random corpus file");
    int gen_count = 100, gen_p = 1, gen_n = 1, gen_degree = 10;
    double gen_scale = 0.2;
    std::uint64_t gen_seed = 1;
    std::string gen_mode = "decay", gen_out;
    gen->add_option("--count", gen_count, "number of entries (default 100)");
    gen->add_option("--p", gen_p, "valence (default 1)");
    gen->add_option("--n", gen_n, "gap order (default 1)");
    gen->add_option("--degree", gen_degree, "polynomial degree (default 10)");
    gen->add_option("--scale", gen_scale, "coefficient cap scale (default 0.2)");
    gen->add_option("--seed", gen_seed, "seed of the first entry (default 1)");
    gen->add_option("--mode", gen_mode, "decay or aggressive (default decay)");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(pf_bounds, bounds->count("--lambda") > 0);
        if (oracle->parsed())
            return cmd_oracle(pf_oracle, oracle_m, oracle->count("--m") > 0, oracle_samples);
        if (verify->parsed())
            return cmd_verify(pf_verify, gf_verify, sf_verify, fmt_verify,
                              verify->count("--p") > 0 || verify->count("--n") > 0);
        if (sweep->parsed())
            return cmd_sweep(pf_sweep, gf_sweep, sf_sweep, sw_alphas, sw_betas, sw_gammas,
                             sw_lambdas, sweep_out);
        if (search->parsed()) return cmd_search(pf_search, gf_search, search_opts, fmt_search);
        if (valence->parsed()) return cmd_valence(gf_valence, sf_valence, val_p, val_n, val_r);
        if (jack->parsed())
            return cmd_jack(jk_order, jk_degree, jk_scale, jk_seed, jk_count, jk_r0, jk_samples,
                            jk_coeffs);
        if (gen->parsed())
            return cmd_gen(gen_count, gen_p, gen_n, gen_degree, gen_scale, gen_seed, gen_mode,
                           gen_out);
    } catch (const ParamOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MalformedFile& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvariantViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}

} // namespace gftv
