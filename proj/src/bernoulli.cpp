#include "etaembed/bernoulli.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <sstream>

#include "etaembed/errors.hpp"

namespace etaembed {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

// B_0..B_n exact via sum_{k=0}^{n} C(n+1,k) B_k = 0  =>
// B_n = -(1/(n+1)) sum_{k<n} C(n+1,k) B_k.
std::vector<cpp_rational> exact_bernoulli(int nmax) {
    std::vector<cpp_rational> b(nmax + 1);
    b[0] = 1;
    for (int n = 1; n <= nmax; ++n) {
        cpp_rational acc = 0;
        cpp_int binom = 1;  // C(n+1, 0)
        for (int k = 0; k < n; ++k) {
            acc += cpp_rational(binom) * b[k];
            binom = binom * (n + 1 - k) / (k + 1);  // exact integer division
        }
        b[n] = -acc / (n + 1);
    }
    return b;
}

double log_zeta_even(int twoj) {
    // log zeta(2j) = log(1 + 2^-2j + 3^-2j + ...), fast for 2j >= 4.
    double tail = 0.0;
    for (int i = 2; i <= 64; ++i) {
        double term = std::pow(static_cast<double>(i), -static_cast<double>(twoj));
        tail += term;
        if (term < 1e-20 * (1.0 + tail)) break;
    }
    return std::log1p(tail);
}

}  // namespace

BernoulliTable::BernoulliTable(int jmax) : jmax_(jmax) {
    if (jmax < 1 || jmax > 200)
        throw domain_error("bernoulli_even: jmax must be in [1, 200]");

    value_.resize(jmax + 1);
    log_abs_.resize(jmax + 1);
    sign_.resize(jmax + 1);
    rational_.resize(jmax + 1);

    const int exact_top = std::min(2 * jmax, kExactLimit);
    auto exact = exact_bernoulli(exact_top);

    for (int j = 0; j <= jmax; ++j) {
        if (2 * j <= kExactLimit) {
            const cpp_rational& r = exact[2 * j];
            double v = r.convert_to<double>();
            value_[j] = v;
            sign_[j] = v < 0 ? -1 : 1;
            log_abs_[j] = j == 0 ? 0.0 : std::log(std::fabs(v));
            std::ostringstream os;
            os << numerator(r) << "/" << denominator(r);
            rational_[j] = os.str();
        } else {
            // B_{2j} = (-1)^{j+1} 2 (2j)! zeta(2j) / (2 pi)^{2j}
            int twoj = 2 * j;
            double la = std::log(2.0) + std::lgamma(twoj + 1.0)
                        - twoj * std::log(2.0 * M_PI) + log_zeta_even(twoj);
            log_abs_[j] = la;
            sign_[j] = (j % 2 == 1) ? 1 : -1;
            value_[j] = sign_[j] * std::exp(la);  // inf past ~2j = 260
        }
    }
}

void BernoulliTable::check_index(int j) const {
    if (j < 0 || j > jmax_)
        throw domain_error("BernoulliTable: index out of range");
}

double BernoulliTable::value(int j) const {
    check_index(j);
    return value_[j];
}

double BernoulliTable::log_abs(int j) const {
    check_index(j);
    return log_abs_[j];
}

int BernoulliTable::sign(int j) const {
    check_index(j);
    return sign_[j];
}

double BernoulliTable::ratio(int j) const {
    check_index(j + 1);
    return sign_[j] * sign_[j + 1] * std::exp(log_abs_[j + 1] - log_abs_[j]);
}

std::string BernoulliTable::rational(int j) const {
    check_index(j);
    if (!is_exact(j))
        throw domain_error("BernoulliTable: no exact rational past B_60");
    return rational_[j];
}

BernoulliTable bernoulli_even(int jmax) { return BernoulliTable(jmax); }

const BernoulliTable& bernoulli_table_200() {
    static const BernoulliTable table(200);
    return table;
}

}  // namespace etaembed
