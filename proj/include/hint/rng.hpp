#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>

namespace hint {

// Deterministic PRNG (splitmix64). The standard library engines and
// distributions are implementation-defined across toolchains; workload
// generation must be byte-for-byte reproducible under a seed, so both the
// generator and the distributions live here.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, n); unbiased by rejection.
    std::uint64_t next_below(std::uint64_t n) {
        assert(n > 0);
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Standard normal via Box-Muller, scaled to (mu, sigma).
    double next_normal(double mu, double sigma) {
        if (have_spare_) {
            have_spare_ = false;
            return mu + sigma * spare_;
        }
        double u, v;
        do {
            u = next_double();
        } while (u <= 0.0);
        v = next_double();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double theta = 2.0 * M_PI * v;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return mu + sigma * r * std::cos(theta);
    }

    // Zipf draw with pdf p(x) = x^-alpha / zeta(alpha), truncated to
    // [1, max_value] by rejection (equivalent to renormalizing the truncated
    // support). Rejection sampler after Devroye; requires alpha > 1.
    std::uint64_t next_zipf(double alpha, std::uint64_t max_value) {
        assert(alpha > 1.0);
        assert(max_value >= 1);
        const double am1 = alpha - 1.0;
        const double b = std::pow(2.0, am1);
        for (;;) {
            const double u = 1.0 - next_double();
            const double v = next_double();
            const double x = std::floor(std::pow(u, -1.0 / am1));
            if (x < 1.0 || x > static_cast<double>(max_value)) continue;
            const double t = std::pow(1.0 + 1.0 / x, am1);
            if (v * x * (t - 1.0) / (b - 1.0) <= t / b)
                return static_cast<std::uint64_t>(x);
        }
    }

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Finalizer used for order-insensitive result checksums: summing mix_id over
// a result set detects both membership and multiplicity differences.
inline std::uint64_t mix_id(std::uint64_t id) {
    std::uint64_t z = id + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace hint
