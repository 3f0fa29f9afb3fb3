// Accuracy-controlled summation: plain, compensated (Neumaier) and
// double-double accumulators for real and complex streams.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace etaembed {

enum class AccumMode { plain, compensated, double_double };

// Streaming real accumulator.  Invariant: value() returns the running sum
// with the error profile of the selected mode; add order is significant
// only through rounding, results are deterministic for a fixed order.
class RealAccum {
public:
    explicit RealAccum(AccumMode mode = AccumMode::compensated)
        : mode_(mode) {}

    void add(double x) {
        switch (mode_) {
        case AccumMode::plain:
            hi_ += x;
            break;
        case AccumMode::compensated: {
            // Neumaier variant: compensation also covers |x| > |sum|.
            double t = hi_ + x;
            if (std::fabs(hi_) >= std::fabs(x))
                lo_ += (hi_ - t) + x;
            else
                lo_ += (x - t) + hi_;
            hi_ = t;
            break;
        }
        case AccumMode::double_double: {
            // Knuth two-sum, then fold the error into the low word.
            double s = hi_ + x;
            double bv = s - hi_;
            double err = (hi_ - (s - bv)) + (x - bv);
            double lo = lo_ + err;
            // renormalize (quick two-sum: |s| >= |lo| after two-sum)
            hi_ = s + lo;
            lo_ = lo - (hi_ - s);
            break;
        }
        }
    }

    double value() const {
        return mode_ == AccumMode::plain ? hi_ : hi_ + lo_;
    }

private:
    AccumMode mode_;
    double hi_ = 0.0;
    double lo_ = 0.0;
};

// Complex accumulator: independent real/imaginary parts.
class ComplexAccum {
public:
    explicit ComplexAccum(AccumMode mode = AccumMode::compensated)
        : re_(mode), im_(mode) {}

    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }

    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    RealAccum re_, im_;
};

// One-shot sum of a term sequence in the given mode.
inline std::complex<double> accumulate(const std::vector<std::complex<double>>& terms,
                                       AccumMode mode) {
    ComplexAccum acc(mode);
    for (auto z : terms) acc.add(z);
    return acc.value();
}

}  // namespace etaembed
