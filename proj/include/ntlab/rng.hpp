#pragma once

#include <cstdint>
#include <cstddef>
#include <cmath>
#include <vector>
#include <numeric>

namespace ntlab {

// Counter-based stream: (seed, stream_id) -> independent generator.
// splitmix64 expands the key into xoshiro256++ state, so streams can be
// created in any order (one per replicate) and still reproduce bit-for-bit.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id) {
        std::uint64_t z = seed ^ (stream_id * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull);
        for (auto& si : s_) {
            si = splitmix(z);
        }
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1; // xoshiro state must be nonzero
        have_spare_ = false;
        spare_ = 0.0;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform on [0,1)
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // uniform on (0,1], for logs
    double uniform_pos() { return double((next_u64() >> 11) + 1) * 0x1.0p-53; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.28318530717958647692 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    bool bernoulli(double p) { return uniform() < p; }

    // unbiased-enough bounded integer (Lemire multiply-shift)
    std::uint64_t uniform_int(std::uint64_t n) {
        return std::uint64_t((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // k distinct indices from 0..n-1, partial Fisher-Yates, order not meaningful
    std::vector<std::uint32_t> sample_without_replacement(std::size_t n, std::size_t k) {
        std::vector<std::uint32_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0u);
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = i + std::size_t(uniform_int(n - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        return idx;
    }

private:
    static std::uint64_t splitmix(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
    double spare_;
    bool have_spare_;
};

// Samples drawn from weighted discrete distributions via cumulative sums;
// probabilities need not be normalized.
class DiscreteSampler {
public:
    explicit DiscreteSampler(const std::vector<double>& weights) : cum_(weights.size()) {
        double acc = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            cum_[i] = acc;
        }
        total_ = acc;
    }

    double total() const { return total_; }

    std::size_t draw(RngStream& rng) const {
        const double u = rng.uniform() * total_;
        // binary search for first cum_ > u
        std::size_t lo = 0, hi = cum_.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (cum_[mid] > u) hi = mid; else lo = mid + 1;
        }
        return lo;
    }

private:
    std::vector<double> cum_;
    double total_;
};

} // namespace ntlab
