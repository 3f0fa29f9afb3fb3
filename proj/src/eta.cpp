#include "etaembed/eta.hpp"

#include <cfloat>
#include <cmath>
#include <sstream>

#include "etaembed/errors.hpp"
#include "etaembed/numkernel.hpp"

namespace etaembed {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void validate(const EvalConfig& cfg) {
    if (cfg.kmax < 8 || cfg.kmax > 512)
        throw domain_error("EvalConfig: kmax must be in [8, 512]");
    if (!(cfg.tol >= 1e-15) || !std::isfinite(cfg.tol))
        throw domain_error("EvalConfig: tol must be finite and >= 1e-15");
}

EtaValue eta_weighted_series(cplx s, const EvalConfig& cfg,
                             const std::vector<double>* weights, bool derivative) {
    validate(cfg);
    if (!finite(s)) throw domain_error("eta: non-finite argument");

    const int kmax = cfg.kmax;
    // Summands u_m = w_m (m+1)^{-s} [* -ln(m+1)], built in extended
    // precision; u_mass tracks sum |u_m|^2 for the rounding floor.
    std::vector<cplx> u(kmax + 1);
    std::vector<double> u_abs(kmax + 1);
    for (int m = 0; m <= kmax; ++m) {
        cplx v = pow_int_neg(m + 1, s);
        if (derivative) v *= -std::log(static_cast<double>(m + 1));
        if (weights) v *= (*weights)[m];
        u[m] = v;
        u_abs[m] = std::abs(v);
    }

    ComplexAccum total(cfg.mode);
    double f2 = 0.0, f1 = 0.0, f0 = 0.0;  // |f_{k-2}|, |f_{k-1}|, |f_k|
    int consec = 0;
    double u_mass2 = 0.0;
    const double quarter_tol = cfg.tol / 4.0;

    for (int k = 0; k <= kmax; ++k) {
        ComplexAccum inner(cfg.mode);
        double c = 1.0;  // C(k, m), ratio-updated
        double sign = 1.0;
        for (int m = 0; m <= k; ++m) {
            inner.add(sign * c * u[m]);
            sign = -sign;
            c = c * static_cast<double>(k - m) / static_cast<double>(m + 1);
        }
        cplx fk = inner.value() * std::ldexp(1.0, -(k + 1));
        total.add(fk);
        u_mass2 += u_abs[k] * u_abs[k];
        f2 = f1;
        f1 = f0;
        f0 = std::abs(fk);

        if (f0 < quarter_tol) {
            if (++consec == 3) {
                double floor = 16.0 * DBL_EPSILON * std::sqrt(u_mass2);
                return {total.value(),
                        f2 + f1 + f0 + std::ldexp(1.0, -(k + 1)) + floor,
                        k + 1};
            }
        } else {
            consec = 0;
        }
    }

    double floor = 16.0 * DBL_EPSILON * std::sqrt(u_mass2);
    double est = f2 + f1 + f0 + std::ldexp(1.0, -(kmax + 1)) + floor;
    std::ostringstream os;
    os << "eta series: stop rule not met by kmax = " << kmax
       << " (last |f_k| = " << f0 << ", tol/4 = " << quarter_tol << ")";
    throw accuracy_error(os.str(), total.value(), est);
}

EtaValue eta(cplx s, const EvalConfig& cfg) {
    return eta_weighted_series(s, cfg, nullptr, false);
}

EtaValue eta_derivative(cplx s, const EvalConfig& cfg) {
    return eta_weighted_series(s, cfg, nullptr, true);
}

bool lambda_singular(cplx s) {
    const double tol = 1e-10;
    if (std::abs(s - cplx(1.0, 0.0)) <= tol) return true;
    // zeros of 1 - 2^s sit at 2 pi i n / ln 2
    if (std::fabs(s.real()) <= tol) {
        double n = std::round(s.imag() * M_LN2 / (2.0 * M_PI));
        if (std::abs(s - cplx(0.0, 2.0 * M_PI * n / M_LN2)) <= tol) return true;
    }
    // uncancelled poles of Gamma(1-s): odd integers >= 3
    double r = std::round(s.real());
    if (r >= 3.0 && std::fmod(r, 2.0) != 0.0 && std::abs(s - cplx(r, 0.0)) <= tol)
        return true;
    return false;
}

cplx lambda_factor(cplx s) {
    if (!finite(s)) throw domain_error("lambda_factor: non-finite argument");
    if (lambda_singular(s))
        throw singularity_error("lambda_factor: argument within 1e-10 of the singular set");

    const double lnpi = std::log(M_PI);
    // log[(1-2^{1-s})/(1-2^s)] + s ln 2 + (s-1) ln pi
    cplx acc = log1m_exp((cplx(1.0, 0.0) - s) * M_LN2) - log1m_exp(s * M_LN2)
               + s * M_LN2 + (s - cplx(1.0, 0.0)) * lnpi;
    if (s.real() > 0.5) {
        // sin(pi s/2) Gamma(1-s) = pi / (2 cos(pi s/2) Gamma(s)):
        // regular at positive even integers, overflow-safe on the right.
        acc += lnpi - M_LN2 - log_cos(s * (M_PI / 2.0)) - log_gamma(s);
    } else {
        acc += log_sin(s * (M_PI / 2.0)) + log_gamma(cplx(1.0, 0.0) - s);
    }
    return std::exp(acc);
}

double functional_residual(cplx s, const EvalConfig& cfg) {
    cplx lhs = eta(s, cfg).value;
    cplx lam = lambda_factor(s);
    // |lam| amplifies the reflected evaluation error, so tighten its budget.
    EvalConfig rcfg = cfg;
    rcfg.tol = std::max(1e-15, cfg.tol / std::max(1.0, std::abs(lam)));
    cplx rhs = lam * eta(cplx(1.0, 0.0) - s, rcfg).value;
    return std::abs(lhs - rhs);
}

cplx eta_oracle(cplx s, int nterms) {
    if (!(s.real() > 0.05))
        throw domain_error("eta_oracle: requires Re s > 0.05");
    if (nterms < 8 || nterms > 4096)
        throw domain_error("eta_oracle: nterms must be in [8, 4096]");

    // Partial sums S_j of sum_m (-1)^{m-1} m^{-s}, then iterated averaging.
    std::vector<cplx> a(nterms);
    cplx acc = 0.0;
    double sign = 1.0;
    for (int m = 1; m <= nterms; ++m) {
        acc += sign * pow_int_neg(m, s);
        a[m - 1] = acc;
        sign = -sign;
    }
    for (int len = nterms - 1; len >= 1; --len)
        for (int i = 0; i < len; ++i) a[i] = 0.5 * (a[i] + a[i + 1]);
    return a[0];
}

}  // namespace etaembed
