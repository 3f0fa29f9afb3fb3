// Zero location and argument-principle counting for eta on the critical
// strip.  Newton refinement is cross-checked by an independent bisection on
// the phase-aligned real trace, and counts by boundary winding.

#include "etaembed/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "etaembed/accum.hpp"
#include "etaembed/errors.hpp"
#include "etaembed/numkernel.hpp"
#include "etaembed/parallel.hpp"
#include "etaembed/textio.hpp"

namespace etaembed {
namespace {

constexpr double kScanThreshold = 0.1;    // |eta| gate for candidate minima
constexpr double kBoundaryFloor = 1e-6;   // min |eta| allowed on a contour
constexpr double kNewtonTarget = 1e-10;   // |eta| acceptance for Newton
constexpr int kNewtonCap = 50;

// Lambda phase at 1/2 + it, unwrapped to land within pi of `reference`.
// Valid whenever the true phase moved less than pi since the reference
// point; the callers keep consecutive evaluations within 0.05 in t.
double lambda_phase(double t, double reference) {
    double raw = std::arg(lambda_factor(cplx(0.5, t)));
    double k = std::round((reference - raw) / (2.0 * M_PI));
    return raw + 2.0 * M_PI * k;
}

// Real trace whose sign changes exactly at on-line zeros: rotate eta by
// half the lambda phase.  The functional equation makes the result real up
// to evaluation error.
double aligned_trace(double t, double& phase, const EvalConfig& cfg) {
    phase = lambda_phase(t, phase);
    cplx rot = std::exp(cplx(0.0, -0.5 * phase));
    return (rot * eta(cplx(0.5, t), cfg).value).real();
}

}  // namespace

std::vector<double> scan_critical_line(double t_min, double t_max, double step,
                                       const EvalConfig& cfg, int threads) {
    if (!(t_min > 0.0) || !(t_max > t_min) || !(t_max <= 60.0))
        throw domain_error("scan_critical_line: need 0 < t_min < t_max <= 60");
    if (!(step > 0.0) || !(step <= 0.1))
        throw domain_error("scan_critical_line: need 0 < step <= 0.1");
    validate(cfg);

    size_t n = static_cast<size_t>(std::floor((t_max - t_min) / step)) + 1;
    std::vector<double> ts(n), mags(n);
    for (size_t i = 0; i < n; ++i) ts[i] = t_min + static_cast<double>(i) * step;
    parallel_for_index(n, threads, [&](size_t i) {
        mags[i] = std::abs(eta(cplx(0.5, ts[i]), cfg).value);
    });

    std::vector<double> out;
    std::vector<double> out_mag;
    for (size_t i = 1; i + 1 < n; ++i) {
        if (mags[i] >= kScanThreshold) continue;
        if (!(mags[i] < mags[i - 1] && mags[i] <= mags[i + 1])) continue;
        if (!out.empty() && ts[i] - out.back() < 0.3) {
            // Same dip seen twice: keep the deeper sample.
            if (mags[i] < out_mag.back()) {
                out.back() = ts[i];
                out_mag.back() = mags[i];
            }
            continue;
        }
        out.push_back(ts[i]);
        out_mag.push_back(mags[i]);
    }
    return out;
}

ZeroRecord refine_zero(double t0, const EvalConfig& cfg) {
    if (!std::isfinite(t0)) throw domain_error("refine_zero: t0 not finite");
    validate(cfg);

    cplx s(0.5, t0);
    std::ostringstream trace;
    for (int iter = 0; iter <= kNewtonCap; ++iter) {
        EtaValue e = eta(s, cfg);
        double mag = std::abs(e.value);
        if (mag < kNewtonTarget) {
            if (!(s.real() > 0.0 && s.real() < 1.0))
                throw consistency_error(
                    "refine_zero: converged outside the critical strip at sigma = " +
                    format_real(s.real()));
            ZeroRecord z;
            z.sigma = s.real();
            z.t = s.imag();
            z.residual = mag;
            z.method = RefineMethod::newton;
            z.iterations = iter;
            return z;
        }
        cplx d = eta_derivative(s, cfg).value;
        if (std::abs(d) < 1e-30)
            throw consistency_error("refine_zero: derivative underflow at s = " +
                                    format_complex(s));
        trace << ' ' << format_complex(s);
        s -= e.value / d;
    }
    throw accuracy_error("refine_zero: no convergence in 50 steps; iterates:" +
                             trace.str(),
                         cplx(s), std::abs(eta(s, cfg).value));
}

ZeroRecord refine_zero_bisect(double t0, const EvalConfig& cfg) {
    if (!std::isfinite(t0) || t0 <= 0.2)
        throw domain_error("refine_zero_bisect: t0 must exceed 0.2");
    validate(cfg);

    // Walk outward in 0.05 steps, carrying the phase, until the trace
    // changes sign.  Right first, then left, nearest pair wins.
    const double h = 0.05;
    const int reach = 6;
    double lo = 0.0, hi = 0.0, f_lo = 0.0, f_hi = 0.0, ph_lo = 0.0, ph_hi = 0.0;
    bool bracketed = false;
    for (int side = 0; side < 2 && !bracketed; ++side) {
        double dir = (side == 0) ? 1.0 : -1.0;
        double phase = 0.0;
        double prev_t = t0;
        double prev_f = aligned_trace(t0, phase, cfg);
        double prev_ph = phase;
        for (int k = 1; k <= reach; ++k) {
            double tk = t0 + dir * h * k;
            double fk = aligned_trace(tk, phase, cfg);
            if ((prev_f < 0.0) != (fk < 0.0)) {
                lo = std::min(prev_t, tk);
                hi = std::max(prev_t, tk);
                if (prev_t < tk) {
                    f_lo = prev_f; f_hi = fk; ph_lo = prev_ph; ph_hi = phase;
                } else {
                    f_lo = fk; f_hi = prev_f; ph_lo = phase; ph_hi = prev_ph;
                }
                bracketed = true;
                break;
            }
            prev_t = tk;
            prev_f = fk;
            prev_ph = phase;
        }
    }
    if (!bracketed)
        throw consistency_error("refine_zero_bisect: no sign change within 0.3 of t0 = " +
                                format_real(t0));

    (void)f_hi;
    (void)ph_hi;
    int iterations = 0;
    while (hi - lo > 1e-12 && iterations < 100) {
        double mid = 0.5 * (lo + hi);
        double phase = ph_lo;
        double fm = aligned_trace(mid, phase, cfg);
        if ((fm < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = fm;
            ph_lo = phase;
        } else {
            hi = mid;
        }
        ++iterations;
    }

    ZeroRecord z;
    z.sigma = 0.5;
    z.t = 0.5 * (lo + hi);
    z.residual = std::abs(eta(cplx(0.5, z.t), cfg).value);
    z.method = RefineMethod::bisect;
    z.iterations = iterations;
    return z;
}

double winding_rect(const Rect& r, const EvalConfig& cfg) {
    if (!(r.sigma_min < r.sigma_max) || !(r.t_min < r.t_max) ||
        !std::isfinite(r.sigma_min + r.sigma_max + r.t_min + r.t_max))
        throw domain_error("winding_rect: empty or non-finite rectangle");
    validate(cfg);

    // Walk a contour inset from the nominal boundary so zeros sitting exactly
    // on it count as outside.  Eta vanishes on the sigma = 1 line at
    // t = 2 pi k / ln 2 (the 1 - 2^{1-s} factor); without the inset those
    // points pinch the phase walk on any rectangle with sigma_max = 1.
    const double inset =
        std::min(1e-3, 0.125 * std::min(r.sigma_max - r.sigma_min,
                                        r.t_max - r.t_min));
    const Rect rr{r.sigma_min + inset, r.sigma_max - inset,
                  r.t_min + inset, r.t_max - inset};

    const cplx corners[5] = {
        cplx(rr.sigma_min, rr.t_min), cplx(rr.sigma_max, rr.t_min),
        cplx(rr.sigma_max, rr.t_max), cplx(rr.sigma_min, rr.t_max),
        cplx(rr.sigma_min, rr.t_min)};

    RealAccum total(AccumMode::compensated);
    for (int edge = 0; edge < 4; ++edge) {
        cplx a = corners[edge];
        cplx delta = corners[edge + 1] - a;
        double len = std::abs(delta);
        cplx dir = delta / len;

        double pos = 0.0;
        cplx f0 = eta(a, cfg).value;
        if (std::abs(f0) < kBoundaryFloor)
            throw domain_error("winding_rect: |eta| below 1e-6 on the boundary at " +
                               format_complex(a));
        double h = std::min(0.25, len / 4.0);
        while (pos < len) {
            h = std::min(h, len - pos);
            cplx z1 = a + dir * (pos + h);
            cplx f1 = eta(z1, cfg).value;
            if (std::abs(f1) < kBoundaryFloor)
                throw domain_error("winding_rect: |eta| below 1e-6 on the boundary at " +
                                   format_complex(z1));
            double dphi = std::arg(f1 / f0);
            if (std::fabs(dphi) >= M_PI / 2.0) {
                h *= 0.5;
                if (h < len * 1e-9)
                    throw consistency_error(
                        "winding_rect: step collapsed near " + format_complex(z1) +
                        "; phase not resolvable");
                continue;
            }
            total.add(dphi);
            pos += h;
            f0 = f1;
            h = std::min(h * 1.6, 0.25);
        }
    }
    return total.value() / (2.0 * M_PI);
}

int count_zeros_rect(const Rect& r, const EvalConfig& cfg) {
    double w = winding_rect(r, cfg);
    double nearest = std::round(w);
    if (std::fabs(w - nearest) > 0.05)
        throw consistency_error("count_zeros_rect: winding " + format_real(w) +
                                " is not within 0.05 of an integer");
    return static_cast<int>(nearest);
}

std::array<double, 4> quartet_check(const ZeroRecord& z, const EvalConfig& cfg) {
    validate(cfg);
    cplx s(z.sigma, z.t);
    cplx points[4] = {s, 1.0 - s, std::conj(s), 1.0 - std::conj(s)};
    std::array<double, 4> out{};
    for (int k = 0; k < 4; ++k) out[k] = std::abs(eta(points[k], cfg).value);
    return out;
}

std::string zeros_to_csv(const std::vector<ZeroRecord>& zeros) {
    std::string out = "sigma,t,residual,method,iterations\n";
    for (const ZeroRecord& z : zeros) {
        out += format_real(z.sigma);
        out += ',';
        out += format_real(z.t);
        out += ',';
        out += format_real(z.residual);
        out += ',';
        out += (z.method == RefineMethod::newton) ? "newton" : "bisect";
        out += ',';
        out += std::to_string(z.iterations);
        out += '\n';
    }
    return out;
}

std::string zeros_to_json(const std::vector<ZeroRecord>& zeros) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ZeroRecord& z : zeros) {
        nlohmann::ordered_json item;
        item["sigma"] = z.sigma;
        item["t"] = z.t;
        item["residual"] = z.residual;
        item["method"] = (z.method == RefineMethod::newton) ? "newton" : "bisect";
        item["iterations"] = z.iterations;
        arr.push_back(item);
    }
    return arr.dump();
}

}  // namespace etaembed
