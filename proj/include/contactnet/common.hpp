#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace contactnet {

inline constexpr const char* kVersion = "0.1.0";

// Numerically stable logistic; the branch form keeps values reproducible to
// 1e-12 across platforms.
inline double logistic(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

inline double logit(double p) { return std::log(p / (1.0 - p)); }

// Sum that is exactly invariant to the order of the input terms: terms are
// sorted before accumulation. Used for per-dyad log-likelihood reductions so
// relabeling nodes or permuting dyads cannot change the total.
inline double ordered_sum(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end());
    double total = 0.0;
    for (double t : terms) {
        total += t;
    }
    return total;
}

// Deterministic decimal formatting for CSV output.
inline std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
}

} // namespace contactnet
