#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntlab {

enum class RuleKind { gauss_hermite, adaptive_interval };

// Nodes and weights are stored in the standardized form: a gauss_hermite rule
// integrates against the standard Normal density (weights sum to one), an
// adaptive_interval rule integrates dx over [a,b].
struct QuadratureRule {
    RuleKind kind;
    std::vector<double> nodes;
    std::vector<double> weights;
};

namespace detail {

// Golub-Welsch for Hermite: eigenvalues of the symmetric tridiagonal Jacobi
// matrix give nodes, squared first eigenvector components give weights.
// QL with implicit shifts, adapted from the classic imtql2 routine.
inline void symmetric_tridiagonal_eigen(std::vector<double>& d, std::vector<double>& e,
                                        std::vector<double>& z) {
    const int n = int(d.size());
    e.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        for (;;) {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-15 * dd) break;
            }
            if (m == l) break;
            if (++iter > 50) throw std::runtime_error("quadrature eigenvalue iteration failed");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::fabs(r) : -std::fabs(r)));
            double s = 1.0, c = 1.0, p = 0.0;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if (r == 0.0 && m - 1 >= l) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    // sort ascending by node
    for (int i = 0; i < n - 1; ++i) {
        int k = i;
        for (int j = i + 1; j < n; ++j)
            if (d[j] < d[k]) k = j;
        if (k != i) {
            std::swap(d[i], d[k]);
            std::swap(z[i], z[k]);
        }
    }
}

} // namespace detail

// n-point rule exact for polynomials of degree <= 2n-1 against N(0,1).
inline QuadratureRule gauss_hermite_standardized(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite_standardized: n must be positive");
    std::vector<double> d(n, 0.0), e(n), z(n, 0.0);
    for (int i = 0; i < n - 1; ++i) e[i] = std::sqrt((i + 1) / 2.0); // physicists' recurrence
    if (n >= 1) e[n - 1] = 0.0;
    z[0] = 1.0;
    detail::symmetric_tridiagonal_eigen(d, e, z);
    QuadratureRule rule;
    rule.kind = RuleKind::gauss_hermite;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double sqrt2 = 1.4142135623730950488;
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = sqrt2 * d[i]; // physicists' node -> standard Normal coordinate
        rule.weights[i] = z[i] * z[i]; // already sums to one in this normalization
    }
    return rule;
}

// Composite Simpson on [a,b] with n subintervals (n made even).
inline QuadratureRule interval_rule(double a, double b, int n) {
    if (!(b > a)) throw std::invalid_argument("interval_rule: empty interval");
    if (n % 2) ++n;
    if (n < 2) n = 2;
    QuadratureRule rule;
    rule.kind = RuleKind::adaptive_interval;
    const double h = (b - a) / n;
    rule.nodes.resize(n + 1);
    rule.weights.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        rule.nodes[i] = a + h * i;
        double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        rule.weights[i] = w * h / 3.0;
    }
    return rule;
}

// E[f(mean + sd*Z)] for gauss_hermite rules; plain weighted sum for interval
// rules (mean/sd then shift and scale the abscissae the same way).
template <class F>
double integrate_gh(F&& f, double mean, double sd, const QuadratureRule& rule) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double v = f(mean + sd * rule.nodes[i]);
        if (!std::isfinite(v)) throw std::runtime_error("integrand not finite");
        acc += rule.weights[i] * v;
    }
    return acc;
}

// Startup self-check: doubling the node count should not move low-degree
// moments; guards against a silently broken eigen solve.
inline void check_rule_consistency(int n) {
    const QuadratureRule r1 = gauss_hermite_standardized(n);
    const QuadratureRule r2 = gauss_hermite_standardized(2 * n);
    for (int deg : {0, 2, 4, 6}) {
        auto f = [deg](double x) { return std::pow(x, deg); };
        const double a = integrate_gh(f, 0.0, 1.0, r1);
        const double b = integrate_gh(f, 0.0, 1.0, r2);
        if (std::fabs(a - b) > 1e-10)
            throw std::runtime_error("quadrature self-check failed at degree " + std::to_string(deg));
    }
}

} // namespace ntlab
