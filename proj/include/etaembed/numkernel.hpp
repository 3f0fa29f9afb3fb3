// Complex scalar services: real-base powers, principal log-gamma,
// overflow-safe log-sin/cos and log(1 - e^w) helpers.
#pragma once

#include <complex>

namespace etaembed {

using cplx = std::complex<double>;

// base^s = exp(s ln base).  base > 0 and s finite, else domain error.
cplx complex_pow_real_base(double base, cplx s);

// n^{-s} for integer n >= 1 with the exponent formed in extended precision:
// the phase Im(s) ln n is reduced mod 2pi before sin/cos, which keeps the
// rounding of the result near 1 ulp even for |Im s| ~ 60 and n ~ 500.
cplx pow_int_neg(int n, cplx s);

// Principal-branch log Gamma (continuous, real on the positive axis).
// Lanczos rational approximation for Re z >= 0.5, upward recurrence below.
// Pole error when z is within 1e-12 of {0, -1, -2, ...}.
cplx log_gamma(cplx z);

// log sin z and log cos z, stable for large |Im z| (never overflows).
// The imaginary part may differ from the principal branch by 2 pi k;
// callers only exponentiate the result.
cplx log_sin(cplx z);
cplx log_cos(cplx z);

// log(1 - e^w), overflow-safe for large Re w (same branch caveat).
cplx log1m_exp(cplx w);

}  // namespace etaembed
