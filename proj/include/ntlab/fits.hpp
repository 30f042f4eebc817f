#pragma once

#include <cmath>
#include <vector>

#include "ntlab/linalg.hpp"

namespace ntlab {

// log(1 + e^t) without overflow
inline double log1pexp(double t) {
    if (t > 35.0) return t;
    if (t < -35.0) return std::exp(t);
    return std::log1p(std::exp(t));
}

inline double expit(double t) {
    if (t >= 0) {
        const double e = std::exp(-t);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(t);
    return e / (1.0 + e);
}

struct GlmFit {
    std::vector<double> coef;
    Matrix info; // X'WX at the solution
    bool converged = false;
    int iterations = 0;
};

// Weighted logistic regression by IRLS. `columns` are predictor columns; an
// intercept column is prepended, so coef[0] is the intercept. Empty weights
// mean all ones.
GlmFit logistic_fit(const std::vector<const std::vector<double>*>& columns,
                    const std::vector<double>& y, const std::vector<double>& weights,
                    int max_iter = 40);

GlmFit logistic_fit(const std::vector<std::vector<double>>& columns, const std::vector<double>& y,
                    const std::vector<double>& weights, int max_iter = 40);

// Bernoulli log likelihood at linear predictor eta
double bernoulli_loglik(const std::vector<double>& eta, const std::vector<double>& y);

struct LineFit {
    double intercept = 0.0, slope = 0.0;
};

// weighted least squares of y on a single x
LineFit wls_line(const std::vector<double>& x, const std::vector<double>& y,
                 const std::vector<double>& w);

// general weighted least squares, intercept prepended like logistic_fit
std::vector<double> wls_fit(const std::vector<const std::vector<double>*>& columns,
                            const std::vector<double>& y, const std::vector<double>& w);

// Natural cubic regression spline on fixed knots (boundary knots included in
// the list). Basis excludes the intercept: first column is x itself, then the
// usual truncated-cube differences, K-1 columns total.
struct NaturalSplineBasis {
    std::vector<double> knots;

    int dim() const { return int(knots.size()) - 1; }

    void eval(double x, double* out) const {
        const int K = int(knots.size());
        const double xB = knots[K - 1];
        auto cube = [](double t) { return t > 0 ? t * t * t : 0.0; };
        auto dj = [&](int j) {
            return (cube(x - knots[j]) - cube(x - xB)) / (xB - knots[j]);
        };
        out[0] = x;
        const double dlast = dj(K - 2);
        for (int j = 0; j < K - 2; ++j) out[j + 1] = dj(j) - dlast;
    }

    std::vector<std::vector<double>> columns(const std::vector<double>& x) const {
        std::vector<std::vector<double>> cols(dim(), std::vector<double>(x.size()));
        std::vector<double> buf(dim());
        for (std::size_t i = 0; i < x.size(); ++i) {
            eval(x[i], buf.data());
            for (int j = 0; j < dim(); ++j) cols[j][i] = buf[j];
        }
        return cols;
    }
};

// knots at the min/quartiles/max of the data, nudged so boundary values fall inside
NaturalSplineBasis spline_basis_from_quantiles(std::vector<double> x);

} // namespace ntlab
