// Round-trip text formatting shared by the CLI and the exporters.
#pragma once

#include <complex>
#include <string>

namespace etaembed {

// Shortest 17-significant-digit decimal form (%.17g, round-trip safe).
std::string format_real(double x);

// Canonical complex literal a+bi / a-bi, no whitespace, b always present.
std::string format_complex(std::complex<double> z);

// Accepts "a", "a+bi", "a-bi", "bi", "i", "-i"; throws domain error on
// anything else (including embedded whitespace).
std::complex<double> parse_complex(const std::string& text);

}  // namespace etaembed
