#pragma once

#include <cstdint>

namespace lscat {

// splitmix64; platform-independent so seeded runs are byte-identical everywhere.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4558bULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // inclusive bounds
    int uniform(int lo, int hi) { return lo + static_cast<int>(next() % std::uint64_t(hi - lo + 1)); }

    bool oneIn(int n) { return uniform(1, n) == 1; }
};

}  // namespace lscat
