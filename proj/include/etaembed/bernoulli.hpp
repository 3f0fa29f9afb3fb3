// Even Bernoulli numbers: exact rationals for small index, float projections
// with log-magnitude bookkeeping beyond.
#pragma once

#include <string>
#include <vector>

namespace etaembed {

// Table of B_0, B_2, ..., B_{2*jmax}.  Entries with 2j <= 60 come from the
// exact integer convolution recurrence; larger ones from the zeta route.
// Immutable after construction; safe to share across threads.
class BernoulliTable {
public:
    // 1 <= jmax <= 200, else domain error.
    explicit BernoulliTable(int jmax);

    int jmax() const { return jmax_; }

    // B_{2j} as double.  Saturates to +/-inf once past ~2j = 260.
    double value(int j) const;

    // log|B_{2j}|; finite for every tabulated j >= 1.  j = 0 gives 0.
    double log_abs(int j) const;

    // Sign of B_{2j}: +1, -1 (alternates for 2j >= 2).
    int sign(int j) const;

    // B_{2j+2} / B_{2j}, overflow-free for all tabulated j.
    double ratio(int j) const;

    // True when entry j was produced by the exact recurrence (2j <= 60).
    bool is_exact(int j) const { return 2 * j <= kExactLimit; }

    // Exact value "p/q" in lowest terms; only for is_exact(j).
    std::string rational(int j) const;

    static constexpr int kExactLimit = 60;  // largest exact even index

private:
    void check_index(int j) const;

    int jmax_;
    std::vector<double> value_;     // B_{2j}
    std::vector<double> log_abs_;   // log|B_{2j}|
    std::vector<int> sign_;
    std::vector<std::string> rational_;  // "p/q" for exact entries
};

// Convenience: construct a table (the canonical module entry point).
BernoulliTable bernoulli_even(int jmax);

// Shared read-only table with jmax = 200 (built once, thread-safe).
const BernoulliTable& bernoulli_table_200();

}  // namespace etaembed
