// Shift-expansion coefficients: the Bernoulli-series a_n(kappa), their
// convolution inverses b_n(kappa), both shift-series evaluators, and the
// closed-form coefficient-sum identities.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "etaembed/eta.hpp"

namespace etaembed {

struct CoeffTable {
    double kappa = 0.0;
    std::vector<double> a;   // a_0..a_N
    std::vector<double> b;   // b_0..b_N (empty until b_coeffs)
    int N = 0;
    int jcap = 0;            // deepest inner index used by any a_n
    double tail_bound = 0.0; // bound on sum_{n>N} |a_n|
};

// Convergence region honoured by a_coeffs (margin over 3/pi).
double coeff_kappa_min();

// a_n(kappa) = (1/tanh(1/2kappa)) sum_{j>n} 2^{2n}(2^{2j}-1)B_{2j} /
//              (j (2j-2n-1)! (2n)! kappa^{2j-1}),
// inner series advanced by term ratios in log-started form.
// Domain error for kappa <= 3/pi + 0.01 or N outside [0, 64].
CoeffTable a_coeffs(double kappa, int N, double tol = 1e-15);

// Fills b via b_0 = 1, b_k = -sum_{j=1..k} a_j b_{k-j}; asserts the
// convolution identity before returning (consistency error > 1e-10).
CoeffTable b_coeffs(CoeffTable table);

// Largest |sum_k b_k a_{n-k} - delta_{n0}| over n <= N.
double convolution_residual(const CoeffTable& table);

// sum_{n=0..N'} a_n eta(s + 2 nu n) with N' the first index where
// 2|a_n| < cfg.tol (capped at table.N).  Optional tail bound out-param.
std::complex<double> expansion_eval(std::complex<double> s, const CoeffTable& table,
                                    double nu, const EvalConfig& cfg = {},
                                    double* tail_bound = nullptr);

// sum_{n=0..N'} b_n eta_{kappa,nu}(s + 2 nu n) plus the closed-form tail
// correction (remaining b-sum times the deep-shift plateau b_ratio(1,kappa)).
std::complex<double> inversion_eval(std::complex<double> s, const CoeffTable& table,
                                    double nu, const EvalConfig& cfg = {},
                                    double* tail_bound = nullptr);

struct CoeffSumIdentities {
    double a_sum_lhs, a_sum_rhs, a_residual, a_tail;
    double b_sum_lhs, b_sum_rhs, b_residual, b_tail;
};

// Partial sums sum_{n>=1} a_n and b_n against their tanh closed forms.
CoeffSumIdentities coeff_sum_identities(double kappa, int N);

// JSON round-trip: {kappa, N, a[], b[], tail_bound} with full precision.
std::string coeff_table_to_json(const CoeffTable& table);
CoeffTable coeff_table_from_json(const std::string& text);

}  // namespace etaembed
