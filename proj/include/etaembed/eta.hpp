// The alternating eta function: globally convergent accelerated double
// series, term-wise derivative, reflection factor, residual, and an
// independent oracle evaluator.
#pragma once

#include <complex>
#include <vector>

#include "etaembed/accum.hpp"

namespace etaembed {

struct EvalConfig {
    int kmax = 96;          // outer truncation cap, 8..512
    double tol = 1e-14;     // target absolute error, >= 1e-15
    AccumMode mode = AccumMode::compensated;
};

// Validated on entry by every evaluator; throws domain error when violated.
void validate(const EvalConfig& cfg);

struct EtaValue {
    std::complex<double> value;
    double est_error;   // truncation estimate plus a rounding floor
    int terms_used;     // number of outer terms f_0..f_{K}
};

// eta(s) = sum_k 2^{-k-1} sum_{m<=k} C(k,m) (-1)^m (m+1)^{-s}.
// Stops at the first K with three consecutive |f_k| < tol/4; accuracy error
// (carrying the best value) if the cap is hit first.
EtaValue eta(std::complex<double> s, const EvalConfig& cfg = {});

// Term-wise derivative: each summand gains a factor -ln(m+1).
EtaValue eta_derivative(std::complex<double> s, const EvalConfig& cfg = {});

// Shared core: optional per-m weights (w[m] multiplies the (m+1)^{-s}
// summand; nullptr = unweighted) and optional derivative factor.
EtaValue eta_weighted_series(std::complex<double> s, const EvalConfig& cfg,
                             const std::vector<double>* weights, bool derivative);

// Reflection factor lambda(s) = ((1-2^{1-s})/(1-2^s)) 2^s pi^{s-1}
// sin(pi s/2) Gamma(1-s), computed in log space.  Singularity error within
// 1e-10 of {1}, {2 pi i n / ln 2}, or an odd integer >= 3.
std::complex<double> lambda_factor(std::complex<double> s);

// True when lambda_factor(s) would refuse s.
bool lambda_singular(std::complex<double> s);

// |eta(s) - lambda(s) eta(1-s)|, both sides by the direct series.
double functional_residual(std::complex<double> s, const EvalConfig& cfg = {});

// Independent check evaluator: partial sums of the defining alternating
// series accelerated by iterated averaging.  Requires Re s > 0.05; error
// <= 1e-10 for Re s >= 0.5, |Im s| <= 50 at nterms >= 96.
std::complex<double> eta_oracle(std::complex<double> s, int nterms = 96);

}  // namespace etaembed
