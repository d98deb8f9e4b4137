#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lscat/category.hpp"
#include "lscat/prng.hpp"

namespace lscat {

struct AxiomFailure {
    std::uint64_t seed;  // re-running the checker with this seed and one sample replays it
    std::string what;
};

struct AxiomReport {
    std::string axiom;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<AxiomFailure> failures;

    bool pass() const { return failures.empty(); }
};

// The axioms are audited statistically on sampled data, not proven; failures
// carry replayable seeds. Sample i of a run with master seed s draws from
// sub-seed s + i, so checkX(cat, sampler, 1, failure.seed) replays exactly.

// Isomorphisms are trivial cofibrations and trivial fibrations; fibrations
// and cofibrations are closed under composition; two-out-of-three for weak
// equivalences.
template <class Cat, class Sampler>
AxiomReport checkJ1(const Cat& cat, const Sampler& s, int samples, std::uint64_t seed) {
    AxiomReport rep{"J1", samples, seed, {}};
    for (int i = 0; i < samples; ++i) {
        std::uint64_t sub = seed + static_cast<std::uint64_t>(i);
        Rng rng(sub);
        auto fail = [&](const std::string& what) { rep.failures.push_back({sub, what}); };

        auto [x, iso] = s.randomIsomorphism(rng);
        (void)x;
        if (!cat.isFibration(iso) || !cat.isCofibration(iso) || !cat.isWeq(iso))
            fail("isomorphism is not both a trivial cofibration and a trivial fibration");

        auto [p1, p2] = s.randomFibrationPair(rng);
        if (cat.isFibration(p1) && cat.isFibration(p2) && !cat.isFibration(cat.compose(p2, p1)))
            fail("composite of fibrations is not a fibration");

        auto [i1, i2] = s.randomCofibrationPair(rng);
        if (cat.isCofibration(i1) && cat.isCofibration(i2) && !cat.isCofibration(cat.compose(i2, i1)))
            fail("composite of cofibrations is not a cofibration");

        auto [f, g] = s.randomComposablePair(rng);
        int weqs = int(cat.isWeq(f)) + int(cat.isWeq(g)) + int(cat.isWeq(cat.compose(g, f)));
        if (weqs == 2) fail("two-out-of-three violated on a composable pair");
    }
    return rep;
}

// Base extensions along fibrations and cobase extensions along cofibrations
// preserve the expected classes.
template <class Cat, class Sampler>
AxiomReport checkJ2(const Cat& cat, const Sampler& s, int samples, std::uint64_t seed) {
    AxiomReport rep{"J2", samples, seed, {}};
    for (int i = 0; i < samples; ++i) {
        std::uint64_t sub = seed + static_cast<std::uint64_t>(i);
        Rng rng(sub);
        auto fail = [&](const std::string& what) { rep.failures.push_back({sub, what}); };

        typename Cat::Morphism p =
            rng.oneIn(3) ? s.randomTrivialFibration(rng) : s.randomFibration(rng);
        typename Cat::Morphism f = rng.oneIn(7)
                                       ? cat.zeroMorphism(cat.zeroObject(), cat.target(p))
                                       : s.randomMapInto(rng, cat.target(p));
        auto pb = cat.pullbackAlongFibration(f, p);
        if (!cat.morphismsEqual(cat.compose(f, pb.toA), cat.compose(p, pb.toE)))
            fail("pullback square does not commute");
        if (cat.isFibration(p) && !cat.isFibration(pb.toA))
            fail("base extension of a fibration is not a fibration");
        if (cat.isWeq(f) && !cat.isWeq(pb.toE)) fail("base extension of a weq is not a weq");
        if (cat.isFibration(p) && cat.isWeq(p) && !cat.isWeq(pb.toA))
            fail("base extension of a trivial fibration is not a weq");

        typename Cat::Morphism ic =
            rng.oneIn(3) ? s.randomTrivialCofibration(rng) : s.randomCofibration(rng);
        typename Cat::Morphism g = rng.oneIn(7)
                                       ? cat.zeroMorphism(cat.source(ic), cat.zeroObject())
                                       : s.randomMapFrom(rng, cat.source(ic));
        auto po = cat.pushoutAlongCofibration(ic, g);
        if (!cat.morphismsEqual(cat.compose(po.fromB, ic), cat.compose(po.fromC, g)))
            fail("pushout square does not commute");
        if (cat.isCofibration(ic) && !cat.isCofibration(po.fromC))
            fail("cobase extension of a cofibration is not a cofibration");
        if (cat.isWeq(g) && !cat.isWeq(po.fromB)) fail("cobase extension of a weq is not a weq");
        if (cat.isCofibration(ic) && cat.isWeq(ic) && !cat.isWeq(po.fromC))
            fail("cobase extension of a trivial cofibration is not a weq");
    }
    return rep;
}

// Both (M2) factorizations satisfy their class contracts and composite
// identities; every sampled (M1) square admits a filler making both
// triangles commute exactly.
template <class Cat, class Sampler>
AxiomReport checkM1M2(const Cat& cat, const Sampler& s, int samples, std::uint64_t seed) {
    AxiomReport rep{"M1M2", samples, seed, {}};
    for (int i = 0; i < samples; ++i) {
        std::uint64_t sub = seed + static_cast<std::uint64_t>(i);
        Rng rng(sub);
        auto fail = [&](const std::string& what) { rep.failures.push_back({sub, what}); };

        typename Cat::Morphism f = s.randomMorphism(rng);
        auto ff = cat.fFactorize(f);
        if (!cat.morphismsEqual(cat.compose(ff.second, ff.first), f))
            fail("F-factorization composite differs from the factored map");
        if (!cat.isWeq(ff.first) || !cat.isCofibration(ff.first))
            fail("F-factorization first leg is not a trivial cofibration");
        if (!cat.isFibration(ff.second)) fail("F-factorization second leg is not a fibration");

        auto cf = cat.cFactorize(f);
        if (!cat.morphismsEqual(cat.compose(cf.second, cf.first), f))
            fail("C-factorization composite differs from the factored map");
        if (!cat.isCofibration(cf.first)) fail("C-factorization first leg is not a cofibration");
        if (!cat.isFibration(cf.second) || !cat.isWeq(cf.second))
            fail("C-factorization second leg is not a trivial fibration");

        auto sq = s.sampleLiftSquare(rng, rng.uniform(0, 3));
        LiftSquare<typename Cat::Morphism> square{sq.left, sq.top, sq.right, sq.bottom};
        auto filler = cat.lift(square);
        if (!filler) {
            fail("(M1) square admits no filler");
            continue;
        }
        if (!cat.morphismsEqual(cat.compose(*filler, sq.left), sq.top))
            fail("(M1) filler breaks the upper triangle");
        if (!cat.morphismsEqual(cat.compose(sq.right, *filler), sq.bottom))
            fail("(M1) filler breaks the lower triangle");
    }
    return rep;
}

}  // namespace lscat
