// Shift-expansion coefficients: frozen values, decay, inversion, sum
// identities, tail bounds, serialization.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "etaembed/coefficients.hpp"
#include "etaembed/embedding.hpp"
#include "etaembed/errors.hpp"

using namespace etaembed;
using cplx = std::complex<double>;

namespace {
const EvalConfig kTight{128, 1e-12, AccumMode::compensated};
}

TEST_CASE("convergence region excludes small kappa with a margin") {
    CHECK(coeff_kappa_min() == doctest::Approx(3.0 / M_PI + 0.01).epsilon(1e-15));
    CHECK_THROWS_AS(a_coeffs(0.5, 10), domain_error);
    CHECK_THROWS_AS(a_coeffs(0.9649, 10), domain_error);
    CHECK_THROWS_AS(a_coeffs(2.0, -1), domain_error);
    CHECK_THROWS_AS(a_coeffs(2.0, 65), domain_error);
    CHECK_THROWS_AS(a_coeffs(2.0, 10, 0.0), domain_error);
    CHECK_THROWS_AS(a_coeffs(HUGE_VAL, 10), domain_error);
}

TEST_CASE("a coefficients at kappa = 2 match frozen values") {
    CoeffTable t = a_coeffs(2.0, 25);
    REQUIRE(t.a.size() == 26);
    CHECK(t.N == 25);
    CHECK(t.jcap > 0);
    CHECK(t.a[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(t.a[1] == doctest::Approx(-0.2350037122015944890693).epsilon(1e-12));
    CHECK(t.a[2] == doctest::Approx(0.03564310206506364311826).epsilon(1e-12));
    CHECK(t.a[3] == doctest::Approx(-0.004426820660074993967708).epsilon(1e-12));
    CHECK(t.a[4] == doctest::Approx(0.0004840482075285554684216).epsilon(1e-12));
    CHECK(t.a[5] == doctest::Approx(-0.0000477173437059206644492).epsilon(1e-12));

    CHECK(a_coeffs(10.0, 5).a[1] ==
          doctest::Approx(-0.009975041607715678712861).epsilon(1e-12));
    CHECK(a_coeffs(40.0, 3).a[1] * 1600.0 ==
          doctest::Approx(-0.9998437662746006761188).epsilon(1e-10));
}

TEST_CASE("a coefficients decay near 4 / (pi kappa)^2, signs alternate") {
    CoeffTable t = a_coeffs(2.0, 12);
    for (int n = 2; n <= 6; ++n) {
        double ratio = std::fabs(t.a[n + 1] / t.a[n]);
        CHECK(ratio > 0.07);
        CHECK(ratio < 0.135);
    }
    // The kernel's nearest poles sit at x = 1/2 +- i pi kappa / 2, so the
    // signs follow (-1)^n only modulo a slow cos modulation; at kappa = 2
    // the first repeated-sign pair is (9, 10).
    for (int n = 1; n <= 8; ++n) CHECK(t.a[n] * t.a[n + 1] < 0.0);
    CHECK(t.a[9] < 0.0);
    CHECK(t.a[10] < 0.0);
    for (int n = 10; n <= 11; ++n) CHECK(t.a[n] * t.a[n + 1] < 0.0);
}

TEST_CASE("b coefficients invert the convolution") {
    CoeffTable t = b_coeffs(a_coeffs(2.0, 25));
    REQUIRE(t.b.size() == 26);
    CHECK(t.b[0] == 1.0);
    CHECK(t.b[1] == doctest::Approx(0.2350037122015944890693).epsilon(1e-12));
    CHECK(t.b[2] == doctest::Approx(0.01958364268346620742244).epsilon(1e-12));
    CHECK(t.b[5] == doctest::Approx(1.295214463192209485611e-7).epsilon(1e-9));
    CHECK(convolution_residual(t) < 1e-12);
}

TEST_CASE("coefficient sums match their closed forms") {
    CoeffSumIdentities ids = coeff_sum_identities(2.0, 25);
    CHECK(ids.a_sum_rhs == doctest::Approx(-0.2033471721719062979809).epsilon(1e-13));
    CHECK(ids.b_sum_rhs == doctest::Approx(0.2552519304127615704525).epsilon(1e-13));
    CHECK(ids.a_residual < 1e-10);
    CHECK(ids.b_residual < 1e-9);
    CHECK(ids.a_tail >= 0.0);
    CHECK(ids.b_tail >= 0.0);

    // Both sums collapse for a nearly transparent kernel.
    CoeffSumIdentities wide = coeff_sum_identities(1e6, 10);
    CHECK(std::fabs(wide.a_sum_rhs) < 1e-9);
    CHECK(std::fabs(wide.b_sum_rhs) < 1e-9);
    CHECK(wide.a_residual < 1e-9);
    CHECK(wide.b_residual < 1e-9);
}

TEST_CASE("shift expansion reproduces the embedding") {
    CoeffTable t2 = b_coeffs(a_coeffs(2.0, 25));
    EmbeddingParams p2(2.0, 1.0);
    for (cplx s : {cplx(0.25, 2.0), cplx(0.5, 14.134725), cplx(0.75, -8.0)}) {
        cplx lhs = eta_embedding(s, p2, kTight).value;
        cplx rhs = expansion_eval(s, t2, 1.0, kTight);
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }

    CoeffTable t10 = b_coeffs(a_coeffs(10.0, 25));
    cplx s(0.3, 5.0);
    cplx lhs = eta_embedding(s, EmbeddingParams(10.0, 0.75), kTight).value;
    cplx rhs = expansion_eval(s, t10, 0.75, kTight);
    CHECK(std::abs(lhs - rhs) < 1e-10);

    double tail = -1.0;
    expansion_eval(s, t10, 0.75, kTight, &tail);
    CHECK(tail >= 0.0);
    CHECK(tail < 1e-6);
}

TEST_CASE("inversion recovers the plain series from the embedding") {
    CoeffTable t2 = b_coeffs(a_coeffs(2.0, 25));
    cplx s(0.5, 3.0);
    cplx inv = inversion_eval(s, t2, 1.0, kTight);
    CHECK(std::abs(inv - eta(s, kTight).value) < 1e-8);

    CoeffTable t10 = b_coeffs(a_coeffs(10.0, 25));
    cplx at1 = inversion_eval(cplx(1.0, 0.0), t10, 1.0, kTight);
    CHECK(std::abs(at1 - cplx(M_LN2, 0.0)) < 1e-8);

    double tail = -1.0;
    inversion_eval(s, t2, 1.0, kTight, &tail);
    CHECK(tail >= 0.0);
    CHECK(tail < 1e-6);
}

TEST_CASE("a single-entry table still behaves") {
    CoeffTable t = b_coeffs(a_coeffs(2.0, 0));
    REQUIRE(t.N == 0);
    REQUIRE(t.a.size() == 1);
    REQUIRE(t.b.size() == 1);
    CHECK(t.b[0] == 1.0);
    CHECK(convolution_residual(t) < 1e-12);
    cplx v = expansion_eval(cplx(2.0, 0.0), t, 1.0, kTight);
    CHECK(std::abs(v - t.a[0] * eta(cplx(2.0, 0.0), kTight).value) < 1e-14);
}

TEST_CASE("tail bound dominates the measured remainder") {
    CoeffTable t10 = a_coeffs(2.0, 10);
    CoeffTable t25 = a_coeffs(2.0, 25);
    double measured = 0.0;
    for (int n = 11; n <= 25; ++n) measured += std::fabs(t25.a[n]);
    CHECK(t10.tail_bound >= measured);
    CHECK(t10.tail_bound < 1e-6);
    CHECK(t25.tail_bound < t10.tail_bound);
}

TEST_CASE("json round-trip preserves every field bitwise") {
    CoeffTable t = b_coeffs(a_coeffs(2.0, 12));
    CoeffTable r = coeff_table_from_json(coeff_table_to_json(t));
    CHECK(r.kappa == t.kappa);
    CHECK(r.N == t.N);
    CHECK(r.tail_bound == t.tail_bound);
    REQUIRE(r.a.size() == t.a.size());
    REQUIRE(r.b.size() == t.b.size());
    for (std::size_t k = 0; k < t.a.size(); ++k) CHECK(r.a[k] == t.a[k]);
    for (std::size_t k = 0; k < t.b.size(); ++k) CHECK(r.b[k] == t.b[k]);
}
