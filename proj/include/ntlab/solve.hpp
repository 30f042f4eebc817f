#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ntlab/linalg.hpp"

namespace ntlab {

// A system of estimating equations residual(theta) = 0.
struct RootProblem {
    int dim = 1;
    std::function<std::vector<double>(const std::vector<double>&)> residual;
    std::vector<double> init;
    std::optional<std::pair<double, double>> bracket; // scalar fallback only
    double tol = 1e-10;
    int max_iter = 200;
};

namespace detail {

inline double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

inline std::string format_iterate(const std::vector<double>& v) {
    std::ostringstream os;
    os.precision(12);
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "]";
    return os.str();
}

inline std::vector<double> bisect_scalar(const RootProblem& p, double lo, double hi) {
    auto f = [&](double x) { return p.residual({x})[0]; };
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return {lo};
    if (fhi == 0.0) return {hi};
    if ((flo > 0) == (fhi > 0))
        throw std::runtime_error("estimating equation did not converge; last iterate " +
                                 format_iterate({0.5 * (lo + hi)}));
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (std::fabs(fm) < p.tol || hi - lo < 1e-14 * (1.0 + std::fabs(mid))) return {mid};
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return {0.5 * (lo + hi)};
}

} // namespace detail

// Damped Newton with a forward-difference Jacobian; falls back to bisection
// for scalar problems with a bracket. Throws (with the last iterate in the
// message) when neither converges.
inline std::vector<double> solve_root(const RootProblem& p) {
    std::vector<double> theta = p.init;
    if (int(theta.size()) != p.dim) throw std::invalid_argument("solve_root: init has wrong dimension");
    std::vector<double> r = p.residual(theta);
    if (int(r.size()) != p.dim) throw std::invalid_argument("solve_root: residual has wrong dimension");

    double rn = detail::max_abs(r);
    for (int it = 0; it < p.max_iter; ++it) {
        if (rn < p.tol) return theta;
        Matrix J(p.dim, p.dim);
        for (int j = 0; j < p.dim; ++j) {
            const double h = 1e-6 * (1.0 + std::fabs(theta[j]));
            std::vector<double> tp = theta;
            tp[j] += h;
            const std::vector<double> rp = p.residual(tp);
            for (int i = 0; i < p.dim; ++i) J(i, j) = (rp[i] - r[i]) / h;
        }
        std::vector<double> step;
        try {
            std::vector<double> rhs(p.dim);
            for (int i = 0; i < p.dim; ++i) rhs[i] = -r[i];
            step = solve_dense(J, rhs);
        } catch (const std::runtime_error&) {
            break; // singular Jacobian: try the fallback
        }
        double lambda = 1.0;
        bool accepted = false;
        for (int half = 0; half < 40; ++half) {
            std::vector<double> trial(p.dim);
            for (int i = 0; i < p.dim; ++i) trial[i] = theta[i] + lambda * step[i];
            std::vector<double> rt;
            bool finite = true;
            try {
                rt = p.residual(trial);
                for (double v : rt)
                    if (!std::isfinite(v)) finite = false;
            } catch (...) {
                finite = false;
            }
            if (finite && detail::max_abs(rt) < rn) {
                theta = trial;
                r = rt;
                rn = detail::max_abs(r);
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!accepted) break;
    }
    if (rn < p.tol) return theta;
    if (p.dim == 1 && p.bracket) return detail::bisect_scalar(p, p.bracket->first, p.bracket->second);
    throw std::runtime_error("estimating equation did not converge; last iterate " +
                             detail::format_iterate(theta));
}

} // namespace ntlab
