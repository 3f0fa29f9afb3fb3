// Eta evaluator: special values, high-precision reference points on and off
// the strip, the error envelope, the stop rule, the reflection factor and
// its singular set, and the independent oracle.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "etaembed/errors.hpp"
#include "etaembed/eta.hpp"
#include "etaembed/numkernel.hpp"

using etaembed::cplx;
using etaembed::EvalConfig;

namespace {

const EvalConfig kWide{256, 4e-10, etaembed::AccumMode::compensated};

}  // namespace

TEST_CASE("eta special values") {
    CHECK(std::abs(etaembed::eta({1.0, 0.0}).value - cplx(M_LN2, 0.0)) < 1e-13);
    CHECK(std::abs(etaembed::eta({2.0, 0.0}).value -
                   cplx(M_PI * M_PI / 12.0, 0.0)) < 1e-13);
    CHECK(std::abs(etaembed::eta({0.0, 0.0}).value - cplx(0.5, 0.0)) < 1e-13);
    CHECK(std::abs(etaembed::eta({-1.0, 0.0}).value - cplx(0.25, 0.0)) < 1e-13);
    // trivial zero at s = -2
    CHECK(std::abs(etaembed::eta({-2.0, 0.0}).value) < 1e-12);
    // zero of the 1 - 2^{1-s} factor at s = 1 + 2 pi i / ln 2
    CHECK(std::abs(etaembed::eta({1.0, 2.0 * M_PI / M_LN2}).value) < 1e-9);
}

TEST_CASE("eta reference points, right half and critical line") {
    CHECK(std::abs(etaembed::eta({3.0, 0.0}).value -
                   cplx(0.901542677369695714050, 0.0)) < 1e-13);

    cplx want(0.997091432527484834124, 0.524792724747039855059);
    CHECK(std::abs(etaembed::eta({0.5, 3.0}).value - want) < 1e-13);

    want = {1.84758000832664786062, 0.295923649266267821707};
    CHECK(std::abs(etaembed::eta({0.3, 5.0}).value - want) < 1e-13);

    // near the first zero of the completed function
    want = {-1.62122573345590456995e-8, -2.66350492401210459530e-7};
    CHECK(std::abs(etaembed::eta({0.5, 14.134725}).value - want) < 5e-14);
}

TEST_CASE("eta reference points, negative sigma") {
    cplx want(-2057.57540774920622219, -3233.99983985488578763);
    CHECK(std::abs(etaembed::eta({-3.0, 30.0}, kWide).value - want) < 1e-8);

    want = {-249.950068931909344535, -338.424825452191899535};
    CHECK(std::abs(etaembed::eta({-2.5, 21.0}, kWide).value - want) < 1e-8);
}

TEST_CASE("eta error envelope holds at known points") {
    struct Point {
        cplx s;
        cplx truth;
    };
    const Point pts[] = {
        {{1.0, 0.0}, {M_LN2, 0.0}},
        {{2.0, 0.0}, {M_PI * M_PI / 12.0, 0.0}},
        {{0.5, 3.0}, {0.997091432527484834124, 0.524792724747039855059}},
        {{0.3, 5.0}, {1.84758000832664786062, 0.295923649266267821707}},
    };
    for (const Point& p : pts) {
        etaembed::EtaValue v = etaembed::eta(p.s);
        CHECK(std::abs(v.value - p.truth) <= v.est_error);
        CHECK(v.est_error < 1e-10);
        CHECK(v.terms_used >= 8);
        CHECK(v.terms_used <= 96);
    }
    etaembed::EtaValue neg = etaembed::eta({-3.0, 30.0}, kWide);
    CHECK(std::abs(neg.value - cplx(-2057.57540774920622219, -3233.99983985488578763)) <=
          neg.est_error);
}

TEST_CASE("eta conjugate symmetry is exact") {
    const cplx pts[] = {{0.5, 14.134725}, {0.3, 5.0}, {-2.5, 21.0}};
    for (cplx s : pts) {
        cplx a = etaembed::eta(std::conj(s), kWide).value;
        cplx b = std::conj(etaembed::eta(s, kWide).value);
        CHECK(a.real() == b.real());
        CHECK(a.imag() == b.imag());
    }
}

TEST_CASE("eta config validation and stop-rule failure") {
    CHECK_THROWS_AS(etaembed::eta({2.0, 0.0}, EvalConfig{4, 1e-14}),
                    etaembed::domain_error);
    CHECK_THROWS_AS(etaembed::eta({2.0, 0.0}, EvalConfig{96, 1e-16}),
                    etaembed::domain_error);
    CHECK_THROWS_AS(etaembed::eta({HUGE_VAL, 0.0}), etaembed::domain_error);

    // t = 45 cannot settle with only 8 outer terms
    try {
        etaembed::eta({0.5, 45.0}, EvalConfig{8, 1e-14});
        CHECK(false);
    } catch (const etaembed::accuracy_error& e) {
        CHECK(std::isfinite(e.best.real()));
        CHECK(e.est > 1e-14);
    }
}

TEST_CASE("eta agrees with the independent oracle") {
    const cplx pts[] = {{2.0, 0.0}, {0.5, 3.0}, {0.5, 14.134725}, {3.0, -7.0},
                        {1.2, 29.0}};
    for (cplx s : pts) {
        cplx a = etaembed::eta(s).value;
        cplx b = etaembed::eta_oracle(s, 96);
        CHECK(std::abs(a - b) < 1e-10);
    }
    CHECK_THROWS_AS(etaembed::eta_oracle({0.0, 3.0}), etaembed::domain_error);
    CHECK_THROWS_AS(etaembed::eta_oracle({2.0, 0.0}, 4), etaembed::domain_error);
}

TEST_CASE("eta_derivative reference points") {
    CHECK(std::abs(etaembed::eta_derivative({2.0, 0.0}).value -
                   cplx(0.101316578163504501886, 0.0)) < 1e-13);
    cplx want(1.87971070386547840546, -0.0999213974948804103713);
    CHECK(std::abs(etaembed::eta_derivative({0.5, 14.13}).value - want) < 1e-12);
}

TEST_CASE("lambda_factor reference points") {
    cplx want(1.08633114454328908734, 0.289104299400368462927);
    CHECK(std::abs(etaembed::lambda_factor({0.3, 5.0}) - want) < 1e-12);

    want = {-0.992617464351193044218, 0.121287136436672483688};
    CHECK(std::abs(etaembed::lambda_factor({0.5, 14.134725141734694}) - want) < 1e-12);

    want = {0.0760653641625318540763, 1.32065595314616068425};
    CHECK(std::abs(etaembed::lambda_factor({-1.5, 3.0}) - want) < 1e-12);

    want = {1.31603041480268463269, 1.81937217837152175228};
    CHECK(std::abs(etaembed::lambda_factor({2.0, 1.0}) - want) < 1e-12);

    // lambda(2) = eta(2) / eta(-1) = 4 eta(2)
    CHECK(std::abs(etaembed::lambda_factor({2.0, 0.0}) -
                   4.0 * etaembed::eta({2.0, 0.0}).value) < 1e-12);
}

TEST_CASE("lambda modulus is 1 on the half line") {
    for (double t : {3.0, 14.134725, 21.022, 29.5}) {
        CHECK(std::fabs(std::abs(etaembed::lambda_factor({0.5, t})) - 1.0) < 1e-13);
    }
}

TEST_CASE("lambda singular set") {
    CHECK(etaembed::lambda_singular({1.0, 0.0}));
    CHECK(etaembed::lambda_singular({1.0 + 5e-11, 0.0}));
    CHECK(etaembed::lambda_singular({3.0, 0.0}));
    CHECK(etaembed::lambda_singular({5.0, 0.0}));
    CHECK(etaembed::lambda_singular({0.0, 2.0 * M_PI / M_LN2}));
    CHECK(etaembed::lambda_singular({0.0, 0.0}));
    CHECK_FALSE(etaembed::lambda_singular({2.0, 0.0}));
    CHECK_FALSE(etaembed::lambda_singular({4.0, 0.0}));
    CHECK_FALSE(etaembed::lambda_singular({0.5, 14.134725}));
    CHECK_FALSE(etaembed::lambda_singular({3.0, 0.5}));

    CHECK_THROWS_AS(etaembed::lambda_factor({1.0, 0.0}), etaembed::singularity_error);
    CHECK_THROWS_AS(etaembed::lambda_factor({3.0, 0.0}), etaembed::singularity_error);
    CHECK_THROWS_AS(etaembed::lambda_factor({0.0, 2.0 * M_PI / M_LN2}),
                    etaembed::singularity_error);
}

TEST_CASE("functional residual is small across the strip") {
    const cplx pts[] = {{0.5, 3.0},   {0.25, 2.0},  {0.75, -8.0},
                        {-1.5, 3.0},  {2.0, 1.0},   {-2.5, 21.0},
                        {-3.0, 30.0}, {4.0, -30.0}, {0.5, 14.134725}};
    for (cplx s : pts) {
        CHECK(etaembed::functional_residual(s, kWide) < 1e-8);
    }
}
