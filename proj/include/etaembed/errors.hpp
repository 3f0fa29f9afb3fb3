// Error hierarchy shared by all modules.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace etaembed {

// Base for everything thrown on purpose by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument / outside a documented parameter region.
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// Argument within tolerance of a pole of log-gamma.
class pole_error : public domain_error {
public:
    explicit pole_error(const std::string& msg) : domain_error(msg) {}
};

// Argument within tolerance of the singular set of the reflection factor.
class singularity_error : public domain_error {
public:
    explicit singularity_error(const std::string& msg) : domain_error(msg) {}
};

// Series did not meet its stop rule before the truncation cap.
// Carries the best value reached and its error estimate.
class accuracy_error : public error {
public:
    accuracy_error(const std::string& msg, std::complex<double> best_value,
                   double est_error)
        : error(msg), best(best_value), est(est_error) {}
    std::complex<double> best;
    double est;
};

// A required internal cross-check failed (corrupted table, winding slip, ...).
class consistency_error : public error {
public:
    explicit consistency_error(const std::string& msg) : error(msg) {}
};

}  // namespace etaembed
