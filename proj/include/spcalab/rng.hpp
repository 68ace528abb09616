#ifndef SPCALAB_RNG_HPP
#define SPCALAB_RNG_HPP

#include <cstdint>
#include <random>

namespace spcalab {

// Seeded generator with hand-pinned derived draws so that instance families
// reproduce bit-for-bit regardless of the standard library's distribution
// implementations. mt19937_64's raw output sequence is fixed by the standard.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound), bound > 0. Rejection keeps it unbiased.
    int uniform_int(int bound) {
        const std::uint64_t b = static_cast<std::uint64_t>(bound);
        const std::uint64_t rem = (UINT64_MAX % b + 1) % b;  // 2^64 mod b
        std::uint64_t x = next();
        if (rem != 0) {
            const std::uint64_t limit = 0ULL - rem;  // largest multiple of b
            while (x >= limit) x = next();
        }
        return static_cast<int>(x % b);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace spcalab

#endif  // SPCALAB_RNG_HPP
