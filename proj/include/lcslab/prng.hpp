#pragma once

#include "lcslab/rat.hpp"

#include <cstdint>
#include <vector>

namespace lcslab {

/// Deterministic splitmix64 stream. Every randomized search in the library
/// takes an explicit seed and draws from one of these, so results are
/// reproducible across platforms.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Rational with numerator in [-num_bound, num_bound] and denominator
    /// in [1, den_bound].
    Rat rat(long num_bound = 8, long den_bound = 4) {
        return Rat(range(-num_bound, num_bound), range(1, den_bound));
    }

    std::vector<Rat> rat_vector(int n, long num_bound = 8, long den_bound = 4) {
        std::vector<Rat> v;
        v.reserve(n);
        for (int i = 0; i < n; ++i) v.push_back(rat(num_bound, den_bound));
        return v;
    }

private:
    std::uint64_t state_;
};

} // namespace lcslab
