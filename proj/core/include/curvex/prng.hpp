#pragma once

#include <cstdint>
#include <vector>

namespace curvex {

/// splitmix64: tiny deterministic 64-bit generator with the published
/// reference constants, so identical seeds give identical streams on every
/// platform and in every implementation language.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound); bound must be positive. Plain modulo:
    /// the tiny bias is irrelevant for test-fixture generation and keeps the
    /// stream spec trivial to reproduce.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

/// Fisher-Yates shuffle driven by the generator above.
template <class T>
void deterministic_shuffle(std::vector<T>& values, SplitMix64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace curvex
