#pragma once

#include "qha/grid.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace qha::detail {

/**
 * Small deterministic generator (splitmix64 core with hand-rolled
 * Box-Muller). std::normal_distribution is implementation-defined, so it
 * would break byte-identical seeded reports across standard libraries.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed)
        : state_(seed ? seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1]; safe as a log argument.
    double uniform_pos() {
        return double((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next_u64() %
                                     static_cast<std::uint64_t>(hi - lo + 1));
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u = uniform_pos();
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double a = 2.0 * std::numbers::pi * v;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    cplx cnormal() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

    /// Stream for task i derived from a base seed; stable under threading.
    static std::uint64_t substream(std::uint64_t seed, std::uint64_t i) {
        Rng mix(seed ^ (0xD1B54A32D192ED03ULL * (i + 1)));
        return mix.next_u64();
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace qha::detail
