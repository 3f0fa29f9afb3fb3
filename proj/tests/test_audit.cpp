// Claim audits: limit ladders, asymptotic order, functional residuals,
// ratio limits, contested-step reports, suite determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "etaembed/audit.hpp"
#include "etaembed/errors.hpp"

using namespace etaembed;
using cplx = std::complex<double>;

namespace {

const EvalConfig kTight{128, 1e-12, AccumMode::compensated};

const AuditReport& find_report(const std::vector<AuditReport>& reports,
                               const std::string& id) {
    for (const AuditReport& r : reports)
        if (r.check_id == id) return r;
    REQUIRE_MESSAGE(false, ("missing report " + id).c_str());
    static AuditReport dummy;
    return dummy;
}

}  // namespace

TEST_CASE("limit ladders shrink onto their four targets") {
    std::vector<AuditReport> reps =
        limit_audit(cplx(2.0, 0.0), 2.0, {10.0, 100.0, 1000.0}, kTight);
    REQUIRE(reps.size() == 4);
    CHECK(reps[0].check_id == "eq14_kappa_to_inf");
    CHECK(reps[1].check_id == "eq15_kappa_to_0");
    CHECK(reps[2].check_id == "eq16_nu_to_inf");
    CHECK(reps[3].check_id == "eq17_nu_to_0");
    for (const AuditReport& r : reps) {
        CHECK(r.verdict == Verdict::pass);
        CHECK(r.residual <= r.tolerance);
        CHECK(r.tolerance > 0.0);
    }
    CHECK(reps[0].paper_anchor == "eq14");
    CHECK(reps[3].paper_anchor == "eq17");

    CHECK(limit_audit(cplx(2.0, 0.0), 2.0, {}, kTight).empty());
    CHECK_THROWS_AS(limit_audit(cplx(2.0, 0.0), 2.0, {40.0, 20.0}, kTight),
                    domain_error);
    CHECK_THROWS_AS(limit_audit(cplx(2.0, 0.0), 0.0, {10.0, 100.0}, kTight),
                    domain_error);
}

TEST_CASE("asymptotic order recovers both slopes and the leading coefficient") {
    std::vector<AuditReport> reps =
        asymptotic_order(cplx(0.5, 3.0), 1.0, {10.0, 20.0, 40.0}, kTight);
    REQUIRE(reps.size() == 3);
    CHECK(reps[0].check_id == "eq25_order1_slope");
    CHECK(reps[1].check_id == "eq25_order2_slope");
    CHECK(reps[2].check_id == "eq25_leading_coeff");
    for (const AuditReport& r : reps) CHECK(r.verdict == Verdict::pass);
    CHECK(reps[0].residual < 0.05);
    CHECK(reps[1].residual < 0.1);
    CHECK(reps[2].residual < 1e-3);

    CHECK_THROWS_AS(asymptotic_order(cplx(0.5, 3.0), 1.0, {10.0, 20.0}, kTight),
                    domain_error);
    CHECK_THROWS_AS(
        asymptotic_order(cplx(0.5, 3.0), 1.0, {0.5, 1.0, 2.0}, kTight),
        domain_error);
    CHECK_THROWS_AS(
        asymptotic_order(cplx(0.5, 3.0), 1.0, {40.0, 20.0, 10.0}, kTight),
        domain_error);
}

TEST_CASE("embedding functional residual stays below 1e-7") {
    CoeffTable t2 = b_coeffs(a_coeffs(2.0, 25));
    AuditReport r =
        embed_functional_residual(cplx(0.3, 5.0), EmbeddingParams(2.0, 1.0), t2, kTight);
    CHECK(r.check_id == "eq27_functional");
    CHECK(r.paper_anchor == "eq27");
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.residual < 1e-7);

    CoeffTable t5 = b_coeffs(a_coeffs(5.0, 25));
    AuditReport r5 = embed_functional_residual(cplx(0.5, 14.0),
                                               EmbeddingParams(5.0, 0.6), t5, kTight);
    CHECK(r5.verdict == Verdict::pass);
    CHECK(r5.residual < 1e-7);

    // Table kappa must match the embedding parameters and carry b.
    CHECK_THROWS_AS(
        embed_functional_residual(cplx(0.3, 5.0), EmbeddingParams(10.0, 1.0), t2, kTight),
        domain_error);
    CoeffTable no_b = a_coeffs(2.0, 25);
    CHECK_THROWS_AS(
        embed_functional_residual(cplx(0.3, 5.0), EmbeddingParams(2.0, 1.0), no_b, kTight),
        domain_error);
}

TEST_CASE("deep-shift ratio approaches its limit along the ladder") {
    ZeroRecord z1 = refine_zero(14.1, kTight);
    AuditReport r = ratio_limit_audit(z1, 1.0, {10.0, 20.0, 40.0}, kTight);
    CHECK(r.check_id == "eq28_ratio_limit");
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.residual < 5e-5);

    // A flatter shift scale needs one more rung to clear the tolerance.
    ZeroRecord z2 = refine_zero(21.0, kTight);
    AuditReport r2 = ratio_limit_audit(z2, 0.75, {10.0, 20.0, 40.0, 80.0}, kTight);
    CHECK(r2.verdict == Verdict::pass);

    CHECK_THROWS_AS(ratio_limit_audit(z1, 0.4, {10.0, 20.0, 40.0}, kTight),
                    domain_error);
}

TEST_CASE("contested extension ratio is reported, never gated") {
    ZeroRecord z = refine_zero(14.1, kTight);
    std::vector<AuditReport> reps =
        claim36_audit(z, {1.0, 2.0, 5.0, 10.0}, kTight);
    REQUIRE(reps.size() == 9);
    for (const AuditReport& r : reps) {
        CHECK(r.verdict == Verdict::informational);
        CHECK(r.paper_anchor == "eq36");
    }
    for (int i = 0; i < 4; ++i) {
        char id[32];
        std::snprintf(id, sizeof id, "eq36_modulus_n%02d", i);
        CHECK(find_report(reps, id).residual < 1e-10);
    }
    const AuditReport& profile = find_report(reps, "eq36_profile");
    CHECK(profile.inputs.count("complex_residuals") == 1);

    // Off the line the modulus component moves away from 1.
    std::vector<AuditReport> off =
        claim36_audit(ZeroRecord{0.4, 14.134725141734694}, {1.0}, kTight);
    REQUIRE(off.size() == 3);
    CHECK(find_report(off, "eq36_modulus_n00").residual > 1e-4);
    CHECK(find_report(off, "eq36_modulus_n00").verdict == Verdict::informational);

    CHECK(claim36_audit(z, {}, kTight).empty());
    CHECK_THROWS_AS(claim36_audit(z, {0.4}, kTight), domain_error);
}

TEST_CASE("off-line probes measure the asymptote instead of assuming it") {
    ZeroRecord z = refine_zero(14.1, kTight);
    std::vector<AuditReport> reps =
        rh_consistency_audit(z.t, {0.0, 0.1}, {1.0, 5.0}, kTight);
    REQUIRE(reps.size() == 10);

    // eps = 0: conjugate pairing makes the modulus ratio exactly 1.
    CHECK(find_report(reps, "eq43_eps0_n00").residual < 1e-14);
    CHECK(find_report(reps, "eq43_eps0_n00").verdict == Verdict::pass);
    CHECK(find_report(reps, "eq43_eps0_n01").verdict == Verdict::pass);

    // eps = 0.1: at nu = 1 the report is informational; at nu = 5 the
    // asymptote misses its stated 1e-6 band and the verdict records that.
    const AuditReport& loose = find_report(reps, "eq42_asymptote_e01_n00");
    CHECK(loose.verdict == Verdict::informational);
    CHECK(loose.residual > 1e-3);
    CHECK(loose.residual < 1e-1);

    const AuditReport& gated = find_report(reps, "eq42_asymptote_e01_n01");
    CHECK(gated.verdict == Verdict::fail);
    CHECK(gated.residual > 1e-6);
    CHECK(gated.residual < 2e-5);

    CHECK(find_report(reps, "eq42_shiftvar_e00_n00").verdict ==
          Verdict::informational);

    CHECK_THROWS_AS(rh_consistency_audit(z.t, {0.3}, {1.0}, kTight), domain_error);
    CHECK_THROWS_AS(rh_consistency_audit(-1.0, {0.0}, {1.0}, kTight), domain_error);
    CHECK_THROWS_AS(rh_consistency_audit(z.t, {0.0}, {0.0}, kTight), domain_error);
}

TEST_CASE("default suite passes every gated check") {
    AuditOutcome out = run_suite();
    CHECK(out.summary.fail == 0);
    CHECK(out.summary.pass > 0);
    CHECK(out.summary.informational > 0);
    CHECK(out.summary.skipped.empty());
    CHECK(std::is_sorted(out.reports.begin(), out.reports.end(),
                         [](const AuditReport& a, const AuditReport& b) {
                             return a.check_id < b.check_id;
                         }));

    CHECK(out.config_digest.size() == 16);
    for (char c : out.config_digest) CHECK(std::isxdigit(static_cast<unsigned char>(c)));
    CHECK(out.config_digest == audit_config_digest(AuditConfig{}));

    int counted = out.summary.pass + out.summary.fail + out.summary.informational;
    CHECK(counted == static_cast<int>(out.reports.size()));
}

TEST_CASE("suite output is identical for any thread count") {
    std::string one = audit_to_json(run_suite(AuditConfig{}, 1));
    std::string eight = audit_to_json(run_suite(AuditConfig{}, 8));
    CHECK(one == eight);
}

TEST_CASE("jobs outside a domain are skipped, not failed") {
    AuditConfig cfg;
    cfg.kappas = {0.5, 2.0};  // 0.5 sits outside the coefficient region
    cfg.limit_ladder.clear();
    cfg.ladder.clear();
    cfg.nu_grid.clear();
    cfg.eps_list.clear();
    AuditOutcome out = run_suite(cfg, 4);
    CHECK(out.summary.fail == 0);
    CHECK(!out.summary.skipped.empty());
    bool tagged = false;
    for (const std::string& s : out.summary.skipped)
        if (s.find("_k0.5") != std::string::npos) tagged = true;
    CHECK(tagged);
    CHECK(out.summary.pass > 0);  // kappa = 2 jobs still ran
}

TEST_CASE("an empty config yields an empty outcome") {
    AuditOutcome out = run_suite(AuditConfig::none());
    CHECK(out.reports.empty());
    CHECK(out.summary.pass == 0);
    CHECK(out.summary.fail == 0);
    CHECK(out.summary.informational == 0);
    CHECK(out.config_digest.size() == 16);
}

TEST_CASE("json form carries the full report schema") {
    AuditOutcome out = run_suite();
    nlohmann::json j = nlohmann::json::parse(audit_to_json(out));
    CHECK(j["version"] == "1");
    CHECK(j["config_digest"] == out.config_digest);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["summary"]["pass"] == out.summary.pass);
    REQUIRE(j["reports"].is_array());
    REQUIRE(j["reports"].size() == out.reports.size());
    const nlohmann::json& first = j["reports"][0];
    for (const char* key : {"check_id", "paper_anchor", "inputs", "lhs", "rhs",
                            "residual", "tolerance", "verdict"})
        CHECK(first.contains(key));
    CHECK(first["lhs"].contains("re"));
    CHECK(first["lhs"].contains("im"));
    CHECK(first["check_id"] == out.reports[0].check_id);
}

TEST_CASE("verdict names are stable wire strings") {
    CHECK(std::string(verdict_name(Verdict::pass)) == "pass");
    CHECK(std::string(verdict_name(Verdict::fail)) == "fail");
    CHECK(std::string(verdict_name(Verdict::informational)) == "informational");
}
