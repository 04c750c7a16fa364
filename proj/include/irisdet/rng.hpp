#pragma once

#include <cmath>
#include <cstdint>

namespace irisdet {

// splitmix64 step; also used standalone to derive per-item seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0xA3C59AC2B7F3C1D5ULL * (index + 1));
    return splitmix64(s);
}

// Deterministic generator with hand-rolled mappings. std::uniform_*
// distributions are implementation-defined, which would break the
// fixed-seed byte-identity contracts for corpora and trained models.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t nextU64() { return splitmix64(state_); }

    // [0, 1)
    double uniform01() { return static_cast<double>(nextU64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // [0, n); n >= 1. Multiply-high mapping (bias < 2^-32, irrelevant here).
    std::uint32_t uniformInt(std::uint32_t n) {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(nextU64()) * n) >> 64);
    }

    bool coin() { return (nextU64() & 1u) != 0; }

    // Box-Muller with the usual pair cache.
    double gaussian() {
        if (hasSpare_) {
            hasSpare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        double mag = std::sqrt(-2.0 * std::log(u1));
        double ang = 2.0 * 3.14159265358979323846 * u2;
        spare_ = mag * std::sin(ang);
        hasSpare_ = true;
        return mag * std::cos(ang);
    }

    double gaussian(double mean, double sigma) { return mean + sigma * gaussian(); }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool hasSpare_ = false;
};

} // namespace irisdet
