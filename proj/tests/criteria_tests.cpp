#include <doctest.h>

#include <cmath>
#include <limits>

#include "gftv/criteria.hpp"

using gftv::Complex;
using gftv::TheoremParams;
using gftv::Theorem;

namespace {

TheoremParams params_for(Theorem t, int p, int n, double a = 0.0, double b = 0.0,
                         double g = 0.0, double l = 0.0) {
    TheoremParams pr;
    pr.theorem = t;
    pr.p = p;
    pr.n = n;
    pr.alpha = a;
    pr.beta = b;
    pr.gamma = g;
    pr.lambda = l;
    return pr;
}

} // namespace

TEST_SUITE("criteria") {

TEST_CASE("closed-form constants match direct arithmetic") {
    CHECK(gftv::bound_t21(1, 1, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(gftv::bound_t21(2, 1, 0.0) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(gftv::bound_t21(1, 1, 0.5) == doctest::Approx(2.5 / 3.0).epsilon(1e-15));

    CHECK(gftv::bound_t22(1, 1, 0.0) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(gftv::bound_t22(3, 2, 0.0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(gftv::bound_t22(1, 1, 1.0) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));

    CHECK(gftv::bound_t23(gftv::T23Kind::A, 1, 1, 0.0, 1.0, 1.0) ==
          doctest::Approx(1.0 / 8.0).epsilon(1e-15));
    CHECK(gftv::bound_t23(gftv::T23Kind::A, 2, 3, 0.0, 0.0, 1.0) ==
          doctest::Approx(1.5).epsilon(1e-15));
    CHECK(gftv::bound_t23(gftv::T23Kind::B, 1, 1, 0.0, 1.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gftv::bound_t23(gftv::T23Kind::B, 2, 1, 3.0, 2.0, 1.0) ==
          doctest::Approx(2.0 * 8.0).epsilon(1e-15)); // (pn)^1 * |1-3|^3

    CHECK(gftv::bound_t24(1, 1, 1.5) == doctest::Approx(1.3).epsilon(1e-15));
    CHECK(gftv::bound_t24(1, 1, 2.5) == doctest::Approx(7.0 / 6.0).epsilon(1e-15));
    CHECK(gftv::bound_t24(1, 1, 2.0) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("parameter validation rejects out-of-range values") {
    CHECK_THROWS_AS(gftv::bound_t21(1, 1, 1.0), gftv::ParamOutOfRange);
    CHECK_THROWS_AS(gftv::bound_t21(1, 1, -0.1), gftv::ParamOutOfRange);
    CHECK_THROWS_AS(gftv::bound_t22(1, 1, -0.5), gftv::ParamOutOfRange);
    CHECK_THROWS_AS(gftv::bound_t23(gftv::T23Kind::A, 1, 1, 0.0, 0.0, 0.0),
                    gftv::ParamOutOfRange);
    CHECK_THROWS_AS(gftv::bound_t23(gftv::T23Kind::B, 1, 1, 1.0, 1.0, 0.0),
                    gftv::ParamOutOfRange);
    CHECK_THROWS_AS(gftv::bound_t24(1, 1, 1.0), gftv::ParamOutOfRange);  // endpoint
    CHECK_THROWS_AS(gftv::bound_t24(1, 1, 3.0), gftv::ParamOutOfRange);  // endpoint
    CHECK_THROWS_AS(gftv::bound_t24(2, 1, 2.0), gftv::ParamOutOfRange);  // invalid range
}

TEST_CASE("lambda range endpoints at reference parameter pairs") {
    const auto r11 = gftv::lambda_range(1, 1);
    REQUIRE(r11.valid);
    CHECK(r11.lambda1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r11.lambda2 == doctest::Approx(3.0).epsilon(1e-15));
    CHECK_FALSE(r11.unbounded);
    CHECK(r11.contains(2.0));
    CHECK_FALSE(r11.contains(1.0));
    CHECK_FALSE(r11.contains(3.0));

    // n >= 2 at p = 1: the upper endpoint escapes to infinity.
    const auto r12 = gftv::lambda_range(1, 2);
    REQUIRE(r12.valid);
    CHECK(r12.lambda1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r12.unbounded);
    CHECK(r12.contains(1e9));

    // p = 2 admits only n = 12 among n <= 12: lambda1 = 3 exactly
    // (the discriminant vanishes) and lambda2 = 36/(sqrt(208) - 8).
    const auto r212 = gftv::lambda_range(2, 12);
    REQUIRE(r212.valid);
    CHECK(r212.lambda1 == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(r212.lambda2 == doctest::Approx(36.0 / (std::sqrt(208.0) - 8.0)).epsilon(1e-14));

    const auto r21 = gftv::lambda_range(2, 1);
    CHECK_FALSE(r21.valid);
    CHECK(r21.diagnostic.find("discriminant") != std::string::npos);

    for (int n = 1; n <= 10; ++n)
        CHECK(gftv::lambda_range(1, n).lambda1 == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("theta oracle reproduces the closed-form constants at m = n") {
    long excluded = 0;

    const double o21 = gftv::theta_oracle(params_for(Theorem::T21, 1, 1, 0.5), 1.0, 4096);
    CHECK(o21 == doctest::Approx(gftv::bound_t21(1, 1, 0.5)).epsilon(1e-12));

    // alpha = 0 makes the expression constant; the removable singular
    // sample at theta = pi is skipped.
    const double o22 = gftv::theta_oracle(params_for(Theorem::T22, 1, 1, 0.0), 1.0, 4096,
                                          &excluded);
    CHECK(o22 == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(excluded == 1);

    const double o23 = gftv::theta_oracle(params_for(Theorem::T23A, 1, 1, 0.0, 1.0, 1.0), 1.0,
                                          4096, &excluded);
    CHECK(o23 == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(excluded == 1); // the expression diverges at theta = pi

    const double o24 = gftv::theta_oracle(params_for(Theorem::T24, 1, 1, 0, 0, 0, 1.5), 1.0,
                                          4096, &excluded);
    CHECK(o24 == doctest::Approx(1.3).epsilon(1e-12));
    CHECK(excluded == 0);
}

TEST_CASE("theta oracle validates its inputs") {
    CHECK_THROWS_AS(gftv::theta_oracle(params_for(Theorem::T21, 1, 2), 1.0, 4096),
                    gftv::ParamOutOfRange); // m < n
    CHECK_THROWS_AS(gftv::theta_oracle(params_for(Theorem::T21, 1, 1), 1.0, 999),
                    gftv::ParamOutOfRange); // grid too small
    CHECK_THROWS_AS(gftv::theta_oracle(params_for(Theorem::T23B, 1, 1, 0, 1, 1), 1.0, 4096),
                    gftv::ParamOutOfRange); // no theta dependence
    CHECK_THROWS_AS(gftv::theta_expression(params_for(Theorem::T23A, 1, 1, 0, 1, 1), 1.0,
                                           3.14159265358979323846),
                    gftv::SingularTheta);
}

TEST_CASE("boundary expressions are monotone in cos(theta)") {
    // T21 is nondecreasing and T22 nonincreasing in c = cos(theta); the
    // oracle extrema therefore sit at theta = 0.
    const auto p21 = params_for(Theorem::T21, 2, 3, 0.6);
    const auto p22 = params_for(Theorem::T22, 2, 3, 0.4);
    double prev21 = -std::numeric_limits<double>::infinity();
    double prev22 = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 400; ++i) {
        const double theta = 3.14159265358979323846 * (1.0 - i / 400.0); // c ascending
        const double v21 = gftv::theta_expression(p21, 3.0, theta);
        const double v22 = gftv::theta_expression(p22, 3.0, theta);
        CHECK(v21 >= prev21 - 1e-12);
        CHECK(v22 <= prev22 + 1e-12);
        prev21 = v21;
        prev22 = v22;
    }
}

TEST_CASE("larger m never crosses the bound in the proof direction") {
    // Maximized families shrink and minimized families grow as m moves
    // past n, so m = n is the extremal choice.
    for (int m = 1; m <= 6; ++m) {
        const double v = gftv::theta_oracle(params_for(Theorem::T21, 1, 1, 0.5),
                                            static_cast<double>(m), 2048);
        CHECK(v <= gftv::bound_t21(1, 1, 0.5) + 1e-12);

        const double w = gftv::theta_oracle(params_for(Theorem::T22, 1, 1, 0.25),
                                            static_cast<double>(m), 2048);
        CHECK(w >= gftv::bound_t22(1, 1, 0.25) - 1e-12);

        const double x = gftv::theta_oracle(params_for(Theorem::T23A, 1, 1, 0.25, 1, 1),
                                            static_cast<double>(m), 2048);
        CHECK(x >= gftv::bound_t23(gftv::T23Kind::A, 1, 1, 0.25, 1, 1) - 1e-12);

        const double y = gftv::theta_oracle(params_for(Theorem::T24, 1, 1, 0, 0, 0, 1.5),
                                            static_cast<double>(m), 2048);
        CHECK(y >= gftv::bound_t24(1, 1, 1.5) - 1e-12);
    }
}

TEST_CASE("p = n = 1 specializations match the single-valent forms") {
    // At p = n = 1 the general constants collapse to classical ones.
    for (int i = 0; i <= 9; ++i) {
        const double a = 0.1 * i;
        CHECK(gftv::bound_t21(1, 1, a) ==
              doctest::Approx((1.0 + 3.0 * a) / (2.0 * (1.0 + a))).epsilon(1e-12));
        CHECK(gftv::bound_t22(1, 1, a) ==
              doctest::Approx((3.0 + 2.0 * a) / (2.0 + a)).epsilon(1e-12));
        for (double b : {0.0, 1.0, 2.0})
            for (double g : {0.0, 1.0}) {
                if (b + g <= 0.0) continue;
                CHECK(gftv::bound_t23(gftv::T23Kind::A, 1, 1, a, b, g) ==
                      doctest::Approx(std::pow(1.0 - a, b + g) /
                                      std::pow(2.0, b + 2.0 * g)).epsilon(1e-12));
            }
    }
    // Piecewise single-valent starlikeness constant on (1, 3): the branch
    // switches at lambda = 2.
    for (int i = 1; i <= 19; ++i) {
        const double l = 1.0 + 0.1 * i;
        const double expected = (l <= 2.0) ? (5.0 * l - 1.0) / (2.0 * (l + 1.0))
                                           : (l + 1.0) / (2.0 * (l - 1.0));
        CHECK(gftv::bound_t24(1, 1, l) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("conclusion thresholds follow the stated forms") {
    CHECK(gftv::conclusion_threshold(params_for(Theorem::T21, 1, 1, 0.5)) ==
          doctest::Approx(0.75).epsilon(1e-15));
    CHECK(gftv::conclusion_threshold(params_for(Theorem::T23A, 1, 1, 0.0, 1, 1)) ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK(gftv::conclusion_threshold(params_for(Theorem::T22, 1, 1, 0.25)) ==
          doctest::Approx(1.25).epsilon(1e-15));
    CHECK(gftv::conclusion_threshold(params_for(Theorem::T23B, 1, 1, 0.25, 1, 1)) ==
          doctest::Approx(0.75).epsilon(1e-15));
    CHECK(gftv::conclusion_threshold(params_for(Theorem::T24, 1, 1, 0, 0, 0, 1.5)) ==
          doctest::Approx(0.6).epsilon(1e-15));
}

TEST_CASE("pointwise hypothesis and conclusion quantities") {
    const auto id = gftv::make_function(1, 1, {}, 4);
    const auto pr21 = params_for(Theorem::T21, 1, 1, 0.0);
    CHECK(gftv::hyp_value(pr21, id, Complex(0.3, 0.2)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gftv::concl_value(pr21, id, Complex(0.3, 0.2)) == doctest::Approx(1.0).epsilon(1e-15));

    // f = z + 0.1 z^2 at z = -0.999: the quantity is 1 + 0.2z/(1 + 0.2z).
    const auto f = gftv::make_function(1, 1, {{2, Complex(0.1)}}, 4);
    const Complex z(-0.999, 0.0);
    CHECK(gftv::hyp_value(pr21, f, z) ==
          doctest::Approx(1.0 - 0.1998 / 0.8002).epsilon(1e-13));
    CHECK(gftv::concl_value(pr21, f, z) == doctest::Approx(0.8002).epsilon(1e-13));

    // T23 product for the identity vanishes everywhere.
    const auto pr23 = params_for(Theorem::T23A, 1, 1, 0.0, 1.0, 1.0);
    CHECK(gftv::hyp_value(pr23, id, Complex(0.5, -0.4)) == 0.0);

    // T23 factors for f = z^2 + c z^5 have closed forms 5|c||z|^3/2 and
    // 15|c||z|^3.
    const auto g = gftv::make_function(2, 3, {{5, Complex(0.1)}}, 6);
    const auto pr23g = params_for(Theorem::T23A, 2, 3, 0.0, 1.0, 1.0);
    const Complex zg(0.5, 0.25);
    const double mod3 = std::pow(std::abs(zg), 3);
    CHECK(gftv::hyp_value(pr23g, g, zg) ==
          doctest::Approx((5.0 * 0.1 * mod3 / 2.0) * (15.0 * 0.1 * mod3)).epsilon(1e-12));

    // T24 conclusion distance for the identity: |1 - l/(l+1)| = 1/(l+1).
    const auto pr24 = params_for(Theorem::T24, 1, 1, 0, 0, 0, 1.5);
    CHECK(gftv::concl_value(pr24, id, Complex(0.1, 0.7)) ==
          doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("regime notes flag extensions beyond the stated ranges") {
    CHECK(params_for(Theorem::T23B, 1, 1, 0.5, 1, 1).regime_note().empty());
    CHECK_FALSE(params_for(Theorem::T23B, 1, 1, 1.5, 1, 1).regime_note().empty());
    CHECK_NOTHROW(params_for(Theorem::T23B, 1, 1, 1.5, 1, 1).validate());
}

TEST_CASE("theorem names round-trip") {
    using gftv::theorem_from_name;
    using gftv::theorem_name;
    for (auto t : {Theorem::T21, Theorem::T22, Theorem::T23A, Theorem::T23B, Theorem::T24})
        CHECK(theorem_from_name(theorem_name(t)) == t);
    CHECK(theorem_from_name("t23a") == Theorem::T23A);
    CHECK_FALSE(theorem_from_name("t25").has_value());
}

} // TEST_SUITE
