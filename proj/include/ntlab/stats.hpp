#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ntlab/normal.hpp"

namespace ntlab {

inline double mean(const std::vector<double>& v) {
    if (v.empty()) throw std::invalid_argument("mean of empty vector");
    double s = 0.0;
    for (double x : v) s += x;
    return s / double(v.size());
}

// sample variance, ddof = 1
inline double variance(const std::vector<double>& v) {
    if (v.size() < 2) throw std::invalid_argument("variance needs at least two values");
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / double(v.size() - 1);
}

inline double sd(const std::vector<double>& v) { return std::sqrt(variance(v)); }

inline double correlation(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2)
        throw std::invalid_argument("correlation: mismatched or tiny inputs");
    const double ma = mean(a), mb = mean(b);
    double saa = 0.0, sbb = 0.0, sab = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - ma, db = b[i] - mb;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    if (saa <= 0.0 || sbb <= 0.0) throw std::runtime_error("correlation: degenerate input");
    return sab / std::sqrt(saa * sbb);
}

// order statistic at ceil(p*n): deterministic, no interpolation, so critical
// values do not depend on floating tie-break details
inline double quantile(std::vector<double> v, double p) {
    if (v.empty()) throw std::invalid_argument("quantile of empty vector");
    std::sort(v.begin(), v.end());
    const std::size_t k = std::min(v.size() - 1,
                                   std::size_t(std::ceil(p * double(v.size())) - 1));
    return v[std::max<std::size_t>(k, 0)];
}

// Kolmogorov-Smirnov distance against N(mu, sigma^2)
inline double ks_statistic_normal(std::vector<double> v, double mu, double sigma) {
    if (v.size() < 2 || !(sigma > 0.0)) throw std::invalid_argument("ks_statistic_normal: bad input");
    std::sort(v.begin(), v.end());
    const double n = double(v.size());
    double d = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double f = normal_cdf((v[i] - mu) / sigma);
        d = std::max(d, std::max((i + 1) / n - f, f - i / n));
    }
    return d;
}

// 1% critical value of the KS statistic, asymptotic form
inline double ks_critical_1pct(std::size_t n) { return 1.6276 / std::sqrt(double(n)); }

} // namespace ntlab
