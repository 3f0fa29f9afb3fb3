#include "etaembed/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "etaembed/errors.hpp"

namespace etaembed {

EmbeddingParams::EmbeddingParams(double kappa_, double nu_)
    : kappa(kappa_), nu(nu_) {
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw domain_error("EmbeddingParams: kappa must be finite and > 0");
    if (!(nu > 0.0) || !std::isfinite(nu))
        throw domain_error("EmbeddingParams: nu must be finite and > 0");
    in_expansion_region = kappa > 3.0 / M_PI;
}

double b_kernel(double x, double kappa) {
    if (!(kappa > 0.0) || !std::isfinite(kappa) || !std::isfinite(x))
        throw domain_error("b_kernel: kappa must be > 0, x finite");
    const double a = 1.0 / kappa;
    const double b = 2.0 * std::fabs(x) / kappa;
    const double M = std::max(a, b);
    // e^{a-M} - e^{-a-M} = e^{a-M} (1 - e^{-2a}); expm1 keeps small a exact.
    const double num = std::exp(a - M) * (-std::expm1(-2.0 * a));
    const double den = std::exp(a - M) + std::exp(b - M) + std::exp(-b - M)
                       + std::exp(-a - M);
    return num / den;
}

double b_ratio(double x, double kappa) {
    if (!(kappa > 0.0) || !std::isfinite(kappa) || !std::isfinite(x))
        throw domain_error("b_ratio: kappa must be > 0, x finite");
    const double a = 1.0 / kappa;
    const double b = 2.0 * std::fabs(x) / kappa;
    const double M = std::max(a, b);
    const double ea = std::exp(a - M), eb = std::exp(b - M);
    const double ia = std::exp(-a - M), ib = std::exp(-b - M);
    // Shared grouping keeps num == den bitwise at x = 0, where eb == ib.
    const double num = (ea + ia) + 2.0 * std::exp(-M);
    const double den = (ea + ia) + (eb + ib);
    return num / den;  // num <= den since e^b + e^-b >= 2
}

EtaValue eta_embedding(std::complex<double> s, const EmbeddingParams& p,
                       const EvalConfig& cfg) {
    validate(cfg);
    std::vector<double> w(cfg.kmax + 1);
    for (int m = 0; m <= cfg.kmax; ++m)
        w[m] = b_ratio(std::pow(static_cast<double>(m + 1), -p.nu), p.kappa);
    return eta_weighted_series(s, cfg, &w, false);
}

}  // namespace etaembed
