#include "gftv/corpus.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace gftv {

namespace {

// Uniform doubles from the standard-pinned mt19937_64 stream.  The usual
// std::uniform_real_distribution is implementation-defined, so the mapping
// to [0,1) is done by hand to keep corpora reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Unit vector drawn by rejection from the square; magnitude drawn
    // uniformly from [lo_frac, 1] * cap.  Only +,-,*,/ and sqrt touch the
    // doubles, all of which are correctly rounded under IEEE 754.
    Complex disk_coeff(double cap, double lo_frac = 0.0) {
        double x, y, n2;
        do {
            x = 2.0 * uniform01() - 1.0;
            y = 2.0 * uniform01() - 1.0;
            n2 = x * x + y * y;
        } while (n2 > 1.0 || n2 < 1e-12);
        const double norm = std::sqrt(n2);
        const double mag = cap * (lo_frac + (1.0 - lo_frac) * uniform01());
        return {x / norm * mag, y / norm * mag};
    }

private:
    std::mt19937_64 eng_;
};

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& detail) {
    throw MalformedFile("corpus file line " + std::to_string(line_no) + ": " + detail);
}

} // namespace

FunctionSpec random_polynomial(int p, int n, int degree, double scale,
                               std::uint64_t seed, CoeffMode mode) {
    if (p < 1 || n < 1) throw ParamOutOfRange("random polynomial requires p, n >= 1");
    if (degree < p) throw ParamOutOfRange("degree must be >= p");
    if (!(scale >= 0.0)) throw ParamOutOfRange("scale must be nonnegative");

    Rng rng(seed);
    std::map<int, Complex> cs;
    for (int k = p + n; k <= degree; ++k) {
        const double cap = (mode == CoeffMode::Decay)
                               ? scale / (static_cast<double>(k) * k)
                               : scale;
        cs[k] = rng.disk_coeff(cap);
    }
    return make_function(p, n, cs, degree);
}

TestFunction random_test_function(int order, int degree, double scale, std::uint64_t seed) {
    if (order < 1) throw ParamOutOfRange("order must be >= 1");
    if (degree < order) throw ParamOutOfRange("degree must be >= order");
    if (!(scale > 0.0)) throw ParamOutOfRange("scale must be positive");

    Rng rng(seed);
    std::map<int, Complex> cs;
    cs[order] = rng.disk_coeff(scale, 0.25); // leading coefficient stays away from 0
    for (int k = order + 1; k <= degree; ++k)
        cs[k] = rng.disk_coeff(scale / (static_cast<double>(k) * k));
    return make_test_function(order, cs, degree);
}

FunctionSpec classical_function(const std::string& name, int p, int n, int N) {
    if (name == "identity") return make_function(p, n, {}, N);

    if (name == "half-plane") {
        if (p != 1 || n != 1)
            throw ParamOutOfRange("half-plane reference requires p = 1, n = 1");
        std::map<int, Complex> cs;
        for (int k = 1; k <= N; ++k) cs[k] = Complex(1.0);
        FunctionSpec f = make_function(1, 1, cs, N);
        f.exact = false;
        f.tail_coeff = 1.0;
        return f;
    }

    const std::string prefix = "monomial-pair(";
    if (name.size() > prefix.size() + 1 && name.compare(0, prefix.size(), prefix) == 0 &&
        name.back() == ')') {
        const std::string inner = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        std::size_t used = 0;
        double c = 0.0;
        try {
            c = std::stod(inner, &used);
        } catch (const std::exception&) {
            throw UnknownName("unparseable monomial-pair coefficient '" + inner + "'");
        }
        if (used != inner.size())
            throw UnknownName("unparseable monomial-pair coefficient '" + inner + "'");
        return make_function(p, n, {{p + n, Complex(c)}}, N);
    }

    throw UnknownName("unknown classical function '" + name +
                      "' (expected identity, half-plane, or monomial-pair(c))");
}

std::vector<CorpusEntry> make_random_corpus(int count, int p, int n, int degree, double scale,
                                            std::uint64_t seed0, CoeffMode mode) {
    if (count < 0) throw ParamOutOfRange("count must be nonnegative");
    std::vector<CorpusEntry> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const std::uint64_t seed = seed0 + static_cast<std::uint64_t>(i);
        CorpusEntry e;
        e.id = "r" + std::to_string(seed);
        e.function = random_polynomial(p, n, degree, scale, seed, mode);
        std::ostringstream prov;
        prov << "random " << (mode == CoeffMode::Decay ? "decay" : "aggressive")
             << " p=" << p << " n=" << n << " degree=" << degree
             << " scale=" << scale << " seed=" << seed;
        e.provenance = prov.str();
        out.push_back(std::move(e));
    }
    return out;
}

void save_corpus(const std::vector<CorpusEntry>& entries, std::ostream& os) {
    os << "# gftv corpus v1\n";
    for (const CorpusEntry& e : entries) {
        const FunctionSpec& f = e.function;
        os << "entry " << e.id << "\n";
        os << "meta " << f.p << " " << f.n << " " << f.truncation_order() << " "
           << (f.exact ? 1 : 0) << " " << format_g17(f.tail_coeff) << "\n";
        if (!e.provenance.empty()) os << "prov " << e.provenance << "\n";
        for (int k = f.coeffs.lowest_index(); k <= f.coeffs.truncation_order(); ++k) {
            const Complex c = f.coeffs.coeff(k);
            if (c == Complex(0.0)) continue;
            os << "c " << k << " " << format_g17(c.real()) << " " << format_g17(c.imag())
               << "\n";
        }
        os << "end\n";
    }
}

void save_corpus(const std::vector<CorpusEntry>& entries, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw MalformedFile("cannot open '" + path + "' for writing");
    save_corpus(entries, os);
}

std::vector<CorpusEntry> load_corpus(std::istream& is) {
    std::vector<CorpusEntry> out;
    std::set<std::string> seen_ids;

    std::string line;
    std::size_t line_no = 0;

    bool in_entry = false;
    bool have_meta = false;
    std::string id, provenance;
    int p = 0, n = 0, N = 0, exact_flag = 1;
    double tail_coeff = 0.0;
    std::map<int, Complex> cs;
    std::size_t entry_line = 0;

    auto finish_entry = [&]() {
        if (auto it = cs.find(p); it != cs.end() && it->second != Complex(1.0))
            throw InvariantViolation("entry '" + id + "': leading coefficient at index " +
                                     std::to_string(p) + " must be 1");
        FunctionSpec f;
        try {
            f = make_function(p, n, cs, N);
        } catch (const Error& g) {
            throw InvariantViolation("entry '" + id + "': " + g.what());
        }
        f.exact = exact_flag != 0;
        f.tail_coeff = tail_coeff;
        out.push_back(CorpusEntry{id, std::move(f), provenance});
    };

    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        std::istringstream ls(line);
        std::string tag;
        ls >> tag;

        if (tag == "entry") {
            if (in_entry) malformed(line_no, "nested 'entry' before 'end'");
            std::string rest;
            std::getline(ls, rest);
            const std::size_t at = rest.find_first_not_of(' ');
            if (at == std::string::npos) malformed(line_no, "'entry' without an id");
            id = rest.substr(at);
            if (!seen_ids.insert(id).second)
                throw InvariantViolation("duplicate corpus id '" + id + "' at line " +
                                         std::to_string(line_no));
            in_entry = true;
            have_meta = false;
            provenance.clear();
            cs.clear();
            exact_flag = 1;
            tail_coeff = 0.0;
            entry_line = line_no;
            continue;
        }

        if (!in_entry) malformed(line_no, "'" + tag + "' outside an entry");

        if (tag == "meta") {
            if (!(ls >> p >> n >> N >> exact_flag >> tail_coeff))
                malformed(line_no, "'meta' needs: p n N exact tail_coeff");
            have_meta = true;
        } else if (tag == "prov") {
            std::string rest;
            std::getline(ls, rest);
            const std::size_t at = rest.find_first_not_of(' ');
            provenance = (at == std::string::npos) ? "" : rest.substr(at);
        } else if (tag == "c") {
            if (!have_meta) malformed(line_no, "'c' before 'meta'");
            int k = 0;
            double re = 0.0, im = 0.0;
            if (!(ls >> k >> re >> im)) malformed(line_no, "'c' needs: index re im");
            if (cs.count(k))
                throw InvariantViolation("duplicate coefficient index " + std::to_string(k) +
                                         " at line " + std::to_string(line_no));
            cs[k] = Complex(re, im);
        } else if (tag == "end") {
            if (!have_meta) malformed(line_no, "'end' before 'meta'");
            finish_entry();
            in_entry = false;
        } else {
            malformed(line_no, "unknown tag '" + tag + "'");
        }
    }

    if (in_entry)
        malformed(entry_line, "entry '" + id + "' is missing its 'end' line");
    return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw MalformedFile("cannot open '" + path + "' for reading");
    return load_corpus(is);
}

} // namespace gftv
