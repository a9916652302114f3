#pragma once

/*
 * rng.hpp — seeded randomness with stable output.
 *
 * Distributions are implemented on top of the raw engine words so sampled
 * sequences do not depend on the standard library's distribution internals;
 * identical seeds give identical draws everywhere.
 */

#include <cstdint>
#include <random>

#include "sinetype/sinc.hpp"

namespace sinetype {

// splitmix64 step; good enough to derive independent per-task seeds
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return double(eng_() >> 11) * 0x1.0p-53; } // [0, 1)
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // uniform on the closed unit disk (area measure)
    Complex unit_disk() {
        double r = std::sqrt(uniform());
        double phi = 2.0 * 3.141592653589793238462643383279502884 * uniform();
        return Complex(r * std::cos(phi), r * std::sin(phi));
    }

    std::uint64_t word() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

} // namespace sinetype
