// The tanh window kernel B_kappa and the two-parameter weighted eta series
// eta_{kappa,nu} built from it.
#pragma once

#include <complex>

#include "etaembed/eta.hpp"

namespace etaembed {

// (kappa, nu), both finite positive.  in_expansion_region marks the domain
// of the shift-expansion machinery (kappa > 3/pi).
struct EmbeddingParams {
    EmbeddingParams(double kappa_, double nu_);
    double kappa;
    double nu;
    bool in_expansion_region;
};

// B_kappa(x) = (e^{1/k} - e^{-1/k}) / (e^{1/k} + e^{2x/k} + e^{-2x/k} + e^{-1/k}).
// Evaluated with all exponents shifted <= 0: no overflow for any kappa > 0.
double b_kernel(double x, double kappa);

// B_kappa(x)/B_kappa(0) = (e^{1/k} + 2 + e^{-1/k}) / (same denominator),
// always in [0, 1].  Same exponent-shift scheme; the x >> kappa limit
// underflows to the analytic 0.
double b_ratio(double x, double kappa);

// eta_{kappa,nu}(s): the accelerated eta series with each m-summand
// weighted by b_ratio(1/(m+1)^nu, kappa).  Same stop rule as eta().
EtaValue eta_embedding(std::complex<double> s, const EmbeddingParams& p,
                       const EvalConfig& cfg = {});

}  // namespace etaembed
