#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "gftv/corpus.hpp"
#include "gftv/criteria.hpp"
#include "gftv/disk.hpp"

using gftv::Complex;

namespace {

std::string saved(const std::vector<gftv::CorpusEntry>& entries) {
    std::ostringstream os;
    gftv::save_corpus(entries, os);
    return os.str();
}

} // namespace

TEST_SUITE("corpus_io") {

TEST_CASE("same seed reproduces bit-identical coefficients") {
    const auto a = gftv::random_polynomial(2, 3, 9, 0.3, 42);
    const auto b = gftv::random_polynomial(2, 3, 9, 0.3, 42);
    const auto c = gftv::random_polynomial(2, 3, 9, 0.3, 43);
    bool all_equal = true;
    bool any_differ = false;
    for (int k = 2; k <= 9; ++k) {
        all_equal = all_equal && a.coeffs.coeff(k) == b.coeffs.coeff(k);
        any_differ = any_differ || a.coeffs.coeff(k) != c.coeffs.coeff(k);
    }
    CHECK(all_equal);
    CHECK(any_differ);
}

TEST_CASE("magnitude caps and the coefficient gap are respected") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        const auto d = gftv::random_polynomial(2, 3, 12, 0.5, seed, gftv::CoeffMode::Decay);
        const auto g = gftv::random_polynomial(2, 3, 12, 0.5, seed, gftv::CoeffMode::Aggressive);
        CHECK(d.coeffs.coeff(2) == Complex(1.0));
        CHECK(d.coeffs.coeff(3) == Complex(0.0));
        CHECK(d.coeffs.coeff(4) == Complex(0.0));
        for (int k = 5; k <= 12; ++k) {
            CHECK(std::abs(d.coeffs.coeff(k)) <= 0.5 / (k * k) + 1e-15);
            CHECK(std::abs(g.coeffs.coeff(k)) <= 0.5 + 1e-15);
        }
    }
}

TEST_CASE("random disk functions honor order and leading-coefficient floor") {
    for (std::uint64_t seed : {7u, 8u, 9u}) {
        const auto w = gftv::random_test_function(3, 9, 0.8, seed);
        CHECK(w.order == 3);
        CHECK(w.coeffs.coeff(1) == Complex(0.0));
        CHECK(w.coeffs.coeff(2) == Complex(0.0));
        const double lead = std::abs(w.coeffs.coeff(3));
        CHECK(lead >= 0.8 * 0.25 - 1e-15);
        CHECK(lead <= 0.8 + 1e-15);
    }
}

TEST_CASE("named reference functions") {
    const auto id = gftv::classical_function("identity", 2, 3, 8);
    CHECK(id.coeffs.coeff(2) == Complex(1.0));
    CHECK(id.coeffs.lowest_nonzero_index() == 2);
    CHECK(id.exact);

    const auto hp = gftv::classical_function("half-plane", 1, 1, 32);
    CHECK(hp.coeffs.coeff(17) == Complex(1.0));
    CHECK_FALSE(hp.exact);
    CHECK(hp.tail_coeff == 1.0);
    CHECK_THROWS_AS(gftv::classical_function("half-plane", 2, 1), gftv::ParamOutOfRange);

    const auto mp = gftv::classical_function("monomial-pair(-0.25)", 2, 3, 8);
    CHECK(mp.coeffs.coeff(5) == Complex(-0.25));

    CHECK_THROWS_AS(gftv::classical_function("koebe", 1, 1), gftv::UnknownName);
    CHECK_THROWS_AS(gftv::classical_function("monomial-pair(abc)", 1, 1), gftv::UnknownName);
    CHECK_THROWS_AS(gftv::classical_function("monomial-pair(0.5x)", 1, 1), gftv::UnknownName);
}

TEST_CASE("save -> load -> save round-trips byte for byte") {
    auto entries = gftv::make_random_corpus(5, 2, 2, 10, 0.4, 100);
    entries.push_back({"hp", gftv::classical_function("half-plane", 1, 1, 24), "reference"});
    const std::string first = saved(entries);

    std::istringstream is(first);
    const auto loaded = gftv::load_corpus(is);
    REQUIRE(loaded.size() == entries.size());
    CHECK(loaded[0].id == "r100");
    CHECK(loaded[0].provenance == entries[0].provenance);
    CHECK(loaded.back().function.tail_coeff == 1.0);
    CHECK_FALSE(loaded.back().function.exact);

    CHECK(saved(loaded) == first);
}

TEST_CASE("loader reports malformed input with line numbers") {
    auto load_str = [](const std::string& text) {
        std::istringstream is(text);
        return gftv::load_corpus(is);
    };

    CHECK(load_str("").empty());
    CHECK(load_str("# only a comment\n\n").empty());

    try {
        load_str("entry a\nmeta 1 1 4 1 0\nbogus 3\nend\n");
        FAIL("expected MalformedFile");
    } catch (const gftv::MalformedFile& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    CHECK_THROWS_AS(load_str("meta 1 1 4 1 0\n"), gftv::MalformedFile);
    CHECK_THROWS_AS(load_str("entry a\nc 1 1 0\n"), gftv::MalformedFile); // c before meta
    CHECK_THROWS_AS(load_str("entry a\nmeta 1 1 4 1 0\n"), gftv::MalformedFile); // no end
    CHECK_THROWS_AS(load_str("entry a\nmeta 1 1 4 1 0\nend\nentry a\nmeta 1 1 4 1 0\nend\n"),
                    gftv::InvariantViolation); // duplicate id
    CHECK_THROWS_AS(load_str("entry a\nmeta 1 1 4 1 0\nc 1 2 0\nend\n"),
                    gftv::InvariantViolation); // leading coefficient must be 1

    try {
        load_str("entry a\nmeta 1 2 4 1 0\nc 2 0.5 0\nend\n");
        FAIL("expected InvariantViolation");
    } catch (const gftv::InvariantViolation& e) {
        CHECK(std::string(e.what()).find("index 2") != std::string::npos);
    }
}

TEST_CASE("tiny random perturbations keep the strongest hypothesis satisfied") {
    // With |c_k| <= 0.001/k^2 the convexity quantity stays within a few
    // percent of 1, far above the alpha = 0 threshold 1/2.
    const gftv::TheoremParams pr{gftv::Theorem::T21, 1, 1, 0.0, 0.0, 0.0, 0.0};
    const double bound = gftv::bound_t21(1, 1, 0.0);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto f = gftv::random_polynomial(1, 1, 8, 0.001, seed);
        const gftv::CriterionEvaluators ev(pr, f);
        const double lo = gftv::inf_on_circle(ev.hyp_fn(), 0.999, 512);
        CHECK(lo > bound);
    }
}

} // TEST_SUITE
