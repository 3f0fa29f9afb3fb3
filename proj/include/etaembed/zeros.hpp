// Critical-strip zeros: grid scan along the half line, Newton and bisection
// refinement, argument-principle rectangle counts, quartet symmetry.
#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "etaembed/eta.hpp"

namespace etaembed {

enum class RefineMethod { newton, bisect };

struct ZeroRecord {
    double sigma = 0.0;
    double t = 0.0;
    double residual = 0.0;  // |eta| at the accepted point
    RefineMethod method = RefineMethod::newton;
    int iterations = 0;
};

struct Rect {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;
};

// Local minima of |eta(1/2+it)| below 0.1 on the grid, deduplicated.
// Requires 0 < t_min < t_max <= 60 and 0 < step <= 0.1.  Grid values may be
// computed on several threads; the result does not depend on the count.
std::vector<double> scan_critical_line(double t_min, double t_max, double step,
                                       const EvalConfig& cfg = {}, int threads = 1);

// Complex Newton from 1/2 + i*t0 until |eta| < 1e-10, at most 50 steps.
ZeroRecord refine_zero(double t0, const EvalConfig& cfg = {});

// Independent on-line refinement: bisection on the sign of the
// phase-aligned real trace of eta along the half line.
ZeroRecord refine_zero_bisect(double t0, const EvalConfig& cfg = {});

// Accumulated boundary phase change / 2pi, before integer rounding.
// Steps adapt to keep each |delta arg| below pi/2.  The contour is inset by
// min(1e-3, side/8) so zeros exactly on the nominal boundary (eta vanishes
// at sigma = 1, t = 2 pi k / ln 2) count as outside instead of pinching the
// walk; callers must keep genuine zeros farther than 1e-3 from the edges.
double winding_rect(const Rect& r, const EvalConfig& cfg = {});

// Zero count inside r by the argument principle.  Errors when |eta| drops
// below 1e-6 on the walked contour or the winding misses an integer by > 0.05.
int count_zeros_rect(const Rect& r, const EvalConfig& cfg = {});

// |eta| at the symmetry orbit s*, 1-s*, conj s*, 1-conj s*.
std::array<double, 4> quartet_check(const ZeroRecord& z, const EvalConfig& cfg = {});

// Exporters.  CSV columns: sigma,t,residual,method,iterations.
std::string zeros_to_csv(const std::vector<ZeroRecord>& zeros);
std::string zeros_to_json(const std::vector<ZeroRecord>& zeros);

}  // namespace etaembed
