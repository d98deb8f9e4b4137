#pragma once

#include "lscat/category.hpp"
#include "lscat/constructions.hpp"
#include "lscat/homology.hpp"

namespace lscat {

struct ChainInstanceConfig {
    enum class Replacement { Identity, Generic };
    enum class FFactStrategy { Cocylinder, CylinderDetour };

    // All chain complexes are already fibrant and cofibrant; Identity keeps
    // replacements trivial, Generic routes them through cylinder/cocylinder
    // middles so generic engine code is exercised.
    Replacement replacement = Replacement::Identity;
    // CylinderDetour precomposes the cocylinder with a cylinder-of-identity
    // pass; used to property-test "for some (equivalently any)" clauses.
    FFactStrategy fFactStrategy = FFactStrategy::Cocylinder;
    int supportGuard = 32;
    // candidate cap for the exhaustive small-coefficient search in domination
    int dominationBudget = 81;
};

// Rational chain complexes as a structured category:
//   fibrations     = degreewise surjections
//   cofibrations   = degreewise injections
//   weak equivs    = quasi-isomorphisms
//   zero object    = empty complex
class ChainInstance {
public:
    using Object = Complex;
    using Morphism = ChainMap;
    using Factorization = lscat::Factorization;
    using Pullback = PullbackData;
    using Pushout = PushoutData;

    ChainInstance() = default;
    explicit ChainInstance(ChainInstanceConfig cfg) : cfg_(cfg) {}
    const ChainInstanceConfig& config() const { return cfg_; }

    Object zeroObject() const { return Complex::zero(); }
    Object source(const Morphism& m) const { return m.source(); }
    Object target(const Morphism& m) const { return m.target(); }
    Morphism identity(const Object& x) const { return ChainMap::identity(x); }
    Morphism zeroMorphism(const Object& s, const Object& t) const { return ChainMap::zero(s, t); }
    Morphism compose(const Morphism& g, const Morphism& f) const { return lscat::compose(g, f); }
    bool morphismsEqual(const Morphism& a, const Morphism& b) const { return a == b; }
    bool objectsEqual(const Object& a, const Object& b) const { return a == b; }
    bool validObject(const Object& x) const { return validate(x).ok; }
    bool validMorphism(const Morphism& m) const { return validate(m).ok; }

    bool isFibration(const Morphism& m) const { return isDegreewiseSurjective(m); }
    bool isCofibration(const Morphism& m) const { return isDegreewiseInjective(m); }
    bool isWeq(const Morphism& m) const { return isQuasiIso(m); }

    Factorization fFactorize(const Morphism& m) const;
    Factorization cFactorize(const Morphism& m) const;

    Pullback pullbackAlongFibration(const Morphism& f, const Morphism& p) const;
    Pushout pushoutAlongCofibration(const Morphism& i, const Morphism& g) const;
    Morphism mediatePullback(const Pullback& pb, const Morphism& u, const Morphism& v) const {
        return lscat::mediatePullback(pb, u, v);
    }
    Morphism mediatePushout(const Pushout& po, const Morphism& u, const Morphism& v) const {
        return lscat::mediatePushout(po, u, v);
    }

    // Strict filler search by exact affine solve; never guesses.
    std::optional<Morphism> lift(const LiftSquare<ChainMap>& sq) const;

    std::pair<Object, Morphism> cofibrantReplace(const Object& x) const;  // (QX, p_X)
    std::pair<Object, Morphism> fibrantReplace(const Object& x) const;    // (RX, i_X)
    Morphism replaceMapCofibrant(const Morphism& f) const;                // Qf
    Morphism replaceMapFibrant(const Morphism& f) const;                  // Rf

    // Given fPrime * phiX = phiY * f, the induced maps between factorization
    // middles, commuting with both legs (strategy-aware).
    Morphism inducedFFactorizationMap(const Morphism& f, const Morphism& fPrime, const Morphism& phiX,
                                      const Morphism& phiY) const;
    Morphism inducedCFactorizationMap(const Morphism& f, const Morphism& fPrime, const Morphism& phiX,
                                      const Morphism& phiY) const;

    bool weaklySameType(const Object& a, const Object& b) const {
        return homologyDims(a) == homologyDims(b);
    }

    Object dualizeObject(const Object& x) const { return dualize(x); }
    Morphism dualizeMorphism(const Morphism& m) const { return dualizeMap(m); }

    // Ordered candidate morphisms QX -> RY for the domination search:
    // the reflexivity composite when X = Y, then the homology-projection
    // candidate, then exhaustive small-coefficient sweeps up to the budget.
    std::vector<Morphism> dominationCandidates(const Object& x, const Object& y, const Object& qx,
                                               const Morphism& pX, const Object& ry,
                                               const Morphism& iY) const;

    // Instance-level oracles: homology-side characterizations of the
    // diagrammatic decisions. The test suite enforces agreement with the
    // engine before they may be trusted.
    bool weakSectionOracle(const Morphism& g) const;
    bool dominationOracle(const Object& x, const Object& y) const;
    int catOracle(const Object& x) const;  // 0 iff acyclic, else 1

private:
    ChainInstanceConfig cfg_;

    const Complex& guard(const Complex& x) const;
};

}  // namespace lscat
