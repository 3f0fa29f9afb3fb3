#include "etaembed/numkernel.hpp"

#include <cmath>

#include "etaembed/errors.hpp"

namespace etaembed {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey).  Relative error of
// the rational sum is below 1e-15 on Re z >= 0.5.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// log Gamma on Re z >= 0.5 (no pole, no branch issues: Re(z+g-0.5) > 0).
cplx log_gamma_lanczos(cplx z) {
    cplx sum = kLanczos[0];
    for (int i = 1; i < 15; ++i) sum += kLanczos[i] / (z + cplx(i - 1.0, 0.0));
    cplx t = z + cplx(kLanczosG - 0.5, 0.0);
    return 0.5 * std::log(2.0 * M_PI) + (z - cplx(0.5, 0.0)) * std::log(t) - t
           + std::log(sum);
}

}  // namespace

cplx complex_pow_real_base(double base, cplx s) {
    if (!(base > 0.0) || !std::isfinite(base) || !finite(s))
        throw domain_error("complex_pow_real_base: need finite base > 0 and finite s");
    return std::exp(s * std::log(base));
}

cplx pow_int_neg(int n, cplx s) {
    // n^{-s} = exp(-Re s ln n) * e^{-i Im s ln n}, phase reduced in long double.
    const long double ln = logl(static_cast<long double>(n));
    const long double mag = expl(-static_cast<long double>(s.real()) * ln);
    long double theta = fmodl(-static_cast<long double>(s.imag()) * ln,
                              6.283185307179586476925286766559L);
    return {static_cast<double>(mag * cosl(theta)),
            static_cast<double>(mag * sinl(theta))};
}

cplx log_gamma(cplx z) {
    if (!finite(z)) throw domain_error("log_gamma: non-finite argument");
    // Pole screen: within 1e-12 of a nonpositive integer.
    if (z.real() < 0.5) {
        double r = std::round(z.real());
        if (r <= 0.0 && std::abs(z - cplx(r, 0.0)) <= 1e-12)
            throw pole_error("log_gamma: argument within 1e-12 of a pole");
    }
    // Shift into the Lanczos half-plane; subtract the logs of the passed
    // factors (principal-branch identity, valid off the cut).
    cplx shift = 0.0;
    cplx w = z;
    while (w.real() < 0.5) {
        shift += std::log(w);
        w += 1.0;
    }
    return log_gamma_lanczos(w) - shift;
}

cplx log_sin(cplx z) {
    double y = z.imag();
    if (std::fabs(y) <= 1.0) return std::log(std::sin(z));
    if (y > 0.0) {
        // sin z = (i/2) e^{-iz} (1 - e^{2iz}), |e^{2iz}| = e^{-2y} < 1.
        cplx iz(-z.imag(), z.real());
        cplx r = std::exp(2.0 * iz);
        return -iz + std::log(cplx(1.0, 0.0) - r) + cplx(-M_LN2, M_PI / 2.0);
    }
    return std::conj(log_sin(std::conj(z)));
}

cplx log_cos(cplx z) { return log_sin(z + cplx(M_PI / 2.0, 0.0)); }

cplx log1m_exp(cplx w) {
    if (w.real() > 0.0) {
        // 1 - e^w = e^w (e^{-w} - 1): keep the exponent out of exp().
        return w + std::log(std::exp(-w) - cplx(1.0, 0.0));
    }
    return std::log(cplx(1.0, 0.0) - std::exp(w));
}

}  // namespace etaembed
