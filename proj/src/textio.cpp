#include "etaembed/textio.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "etaembed/errors.hpp"

namespace etaembed {
namespace {

// Parses a decimal float covering the whole of `piece`; empty/partial fails.
double parse_real_piece(const std::string& piece, const std::string& whole) {
    if (piece.empty())
        throw domain_error("parse_complex: empty number in '" + whole + "'");
    const char* begin = piece.c_str();
    char* end = nullptr;
    double value = std::strtod(begin, &end);
    if (end != begin + piece.size() || !std::isfinite(value))
        throw domain_error("parse_complex: cannot parse '" + whole + "'");
    return value;
}

}  // namespace

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex(std::complex<double> z) {
    std::string out = format_real(z.real());
    out += std::signbit(z.imag()) ? '-' : '+';
    out += format_real(std::fabs(z.imag()));
    out += 'i';
    return out;
}

std::complex<double> parse_complex(const std::string& text) {
    for (char c : text)
        if (std::isspace(static_cast<unsigned char>(c)))
            throw domain_error("parse_complex: whitespace in '" + text + "'");
    if (text.empty()) throw domain_error("parse_complex: empty input");

    if (text.back() != 'i') return {parse_real_piece(text, text), 0.0};

    std::string body = text.substr(0, text.size() - 1);
    // Split at the last +/- that is not a leading sign or an exponent sign.
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        // Pure imaginary: "bi", "i", "-i", "+i".
        if (body.empty() || body == "+") return {0.0, 1.0};
        if (body == "-") return {0.0, -1.0};
        return {0.0, parse_real_piece(body, text)};
    }
    double re = parse_real_piece(body.substr(0, split), text);
    std::string imag_part = body.substr(split);
    if (imag_part == "+") return {re, 1.0};
    if (imag_part == "-") return {re, -1.0};
    return {re, parse_real_piece(imag_part, text)};
}

}  // namespace etaembed
