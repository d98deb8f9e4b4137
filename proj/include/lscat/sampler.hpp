#pragma once

#include "lscat/constructions.hpp"
#include "lscat/linsolve.hpp"
#include "lscat/prng.hpp"

namespace lscat {

struct ChainSamplerConfig {
    int minDegree = -3;
    int maxDegree = 5;
    int maxDimPerDegree = 3;
};

// A lifting problem with left a cofibration, right a fibration, one of them
// trivial, and the square commuting exactly.
struct SampledSquare {
    ChainMap left, top, right, bottom;
};

// Seeded generator of complexes and chain maps for property tests and the
// axiom audit. Complexes are sums of spheres and discs conjugated by random
// degreewise isomorphisms, which reaches every isomorphism type over the
// rationals while keeping entries small.
class ChainSampler {
public:
    ChainSampler() = default;
    explicit ChainSampler(ChainSamplerConfig cfg) : cfg_(cfg) {}

    const ChainSamplerConfig& config() const { return cfg_; }

    Complex randomComplex(Rng& rng) const;
    Complex randomAcyclicComplex(Rng& rng) const;

    // uniform-ish element of the linear space of chain maps s -> t
    ChainMap randomChainMap(Rng& rng, const Complex& s, const Complex& t) const;

    // fresh complex together with a random isomorphism out of it
    std::pair<Complex, ChainMap> randomIsomorphism(Rng& rng) const;

    ChainMap randomFibration(Rng& rng) const;          // degreewise surjection
    ChainMap randomTrivialFibration(Rng& rng) const;   // surjective quasi-iso
    ChainMap randomCofibration(Rng& rng) const;        // degreewise injection
    ChainMap randomTrivialCofibration(Rng& rng) const; // injective quasi-iso
    ChainMap randomWeq(Rng& rng) const;

    // composable pair (f: X->Y, g: Y->Z) drawn from patterns rich in
    // two-out-of-three premises
    std::pair<ChainMap, ChainMap> randomComposablePair(Rng& rng) const;

    // composable fibration (resp. cofibration) pairs for closure checks
    std::pair<ChainMap, ChainMap> randomFibrationPair(Rng& rng) const;
    std::pair<ChainMap, ChainMap> randomCofibrationPair(Rng& rng) const;

    ChainMap randomMapInto(Rng& rng, const Complex& target) const;
    ChainMap randomMapFrom(Rng& rng, const Complex& source) const;
    ChainMap randomMorphism(Rng& rng) const;

    // variant cycles through: trivial-cofibration side, trivial-fibration
    // side, section-of-trivial-fibration, degenerate identity square
    SampledSquare sampleLiftSquare(Rng& rng, int variant) const;

private:
    ChainSamplerConfig cfg_;

    Mat randomInvertible(Rng& rng, int n) const;
    Complex conjugate(Rng& rng, const Complex& x) const;
};

}  // namespace lscat
