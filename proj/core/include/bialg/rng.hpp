#ifndef BIALG_RNG_HPP
#define BIALG_RNG_HPP

#include <cstdint>
#include <random>

namespace bialg {

// Deterministic uniform generator.  Distributions are hand-mapped from raw
// 64-bit draws so that a given seed produces identical streams on every
// platform (std distributions are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

private:
    std::mt19937_64 eng_;
};

} // namespace bialg

#endif
