#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "ntlab/normal.hpp"
#include "ntlab/rng.hpp"

namespace ntlab {

// sup over a 4001-point grid of log target(x) - log proposal(x), plus a 0.1
// safety margin. The sup landing on an endpoint means the interval clipped
// the mode, which would make the margin a lie.
template <class F>
double find_envelope_bound(F&& target_log, double proposal_mean, double proposal_sd,
                           double lo, double hi) {
    if (!(hi > lo)) throw std::invalid_argument("find_envelope_bound: empty interval");
    const int grid = 4001;
    double best = -1e300;
    int best_i = 0;
    for (int i = 0; i < grid; ++i) {
        const double x = lo + (hi - lo) * i / double(grid - 1);
        const double lp = normal_logpdf((x - proposal_mean) / proposal_sd) - std::log(proposal_sd);
        const double v = target_log(x) - lp;
        if (std::isfinite(v) && v > best) {
            best = v;
            best_i = i;
        }
    }
    if (best_i == 0 || best_i == grid - 1)
        throw std::runtime_error("bound search interval too small");
    return best + 0.1;
}

// Draw n from an unnormalized target via a Normal proposal. The bound must
// dominate log(target/proposal) everywhere; a draw that violates it aborts
// the run rather than silently biasing the sample.
template <class F>
std::vector<double> rejection_sample(F&& target_log, double proposal_mean, double proposal_sd,
                                     double bound_log, std::size_t n, RngStream& rng) {
    std::vector<double> out;
    out.reserve(n);
    while (out.size() < n) {
        const double x = proposal_mean + proposal_sd * rng.normal();
        const double lp = normal_logpdf((x - proposal_mean) / proposal_sd) - std::log(proposal_sd);
        const double lr = target_log(x) - lp - bound_log;
        if (lr > 0.0) throw std::runtime_error("envelope violated");
        if (std::log(rng.uniform_pos()) <= lr) out.push_back(x);
    }
    return out;
}

} // namespace ntlab
