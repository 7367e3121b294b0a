#ifndef SPECMOD_RNG_HPP
#define SPECMOD_RNG_HPP

#include <cstdint>
#include <random>

namespace specmod {

/// Seeded uniform sampler with a fixed bit-to-double mapping, so audit
/// reports are reproducible across standard libraries (std::uniform_*
/// distributions are implementation-defined).
class UniformRng {
public:
    explicit UniformRng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double unit()
    {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Uniform integer in [0, n).
    std::uint64_t index(std::uint64_t n) { return gen_() % n; }

private:
    std::mt19937_64 gen_;
};

} // namespace specmod

#endif
