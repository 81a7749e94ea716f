#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gftv/series.hpp"

namespace gftv {

struct CorpusEntry {
    std::string id;
    FunctionSpec function;
    std::string provenance; // free-form, single line
};

// Coefficient magnitude law for random draws: Decay caps |c_k| at
// scale/k^2 (keeps the derivative quotients tame); Aggressive caps at
// scale uniformly (stress draws for counterexample search).
enum class CoeffMode { Decay, Aggressive };

// Deterministic random polynomial in the class: c_p = 1, gap respected,
// coefficients from p+n up to `degree`.  Identical (args, seed) give
// bit-identical coefficients on any IEEE-double platform: the generator
// uses the standard-pinned mt19937_64 stream and only +,-,*,/ and sqrt.
FunctionSpec random_polynomial(int p, int n, int degree, double scale,
                               std::uint64_t seed, CoeffMode mode = CoeffMode::Decay);

// Deterministic disk function vanishing exactly to `order`: leading
// magnitude in [scale/4, scale], higher coefficients capped by scale/k^2.
TestFunction random_test_function(int order, int degree, double scale, std::uint64_t seed);

// Named reference functions:
//   "identity"            z^p                       (exact)
//   "half-plane"          truncation of z/(1-z); requires p = n = 1,
//                         exact = false, tail coefficient 1
//   "monomial-pair(c)"    z^p + c z^(p+n)           (exact, real c)
FunctionSpec classical_function(const std::string& name, int p, int n, int N = kDefaultTruncation);

// Entries "r<seed>" for seed = seed0 .. seed0+count-1.
std::vector<CorpusEntry> make_random_corpus(int count, int p, int n, int degree, double scale,
                                            std::uint64_t seed0,
                                            CoeffMode mode = CoeffMode::Decay);

// Line-oriented text format (documented in the README); coefficients are
// printed with 17 significant digits so save/load round-trips exactly and
// re-saving a loaded file is byte-identical.
void save_corpus(const std::vector<CorpusEntry>& entries, std::ostream& os);
void save_corpus(const std::vector<CorpusEntry>& entries, const std::string& path);
std::vector<CorpusEntry> load_corpus(std::istream& is);
std::vector<CorpusEntry> load_corpus(const std::string& path);

} // namespace gftv
