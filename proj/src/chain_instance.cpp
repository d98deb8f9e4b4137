#include "lscat/chain_instance.hpp"

#include "lscat/errors.hpp"
#include "lscat/hom_space.hpp"
#include "lscat/map_solver.hpp"

namespace lscat {

const Complex& ChainInstance::guard(const Complex& x) const {
    if (!x.dims().entries.empty() &&
        (x.minDegree() < -cfg_.supportGuard || x.maxDegree() > cfg_.supportGuard))
        throw ResourceLimitError("support guard exceeded: degrees outside [-" +
                                 std::to_string(cfg_.supportGuard) + ", " +
                                 std::to_string(cfg_.supportGuard) + "]");
    return x;
}

Factorization ChainInstance::fFactorize(const Morphism& m) const {
    if (cfg_.fFactStrategy == ChainInstanceConfig::FFactStrategy::Cocylinder) {
        Factorization f = cocylinderFactor(m);
        guard(f.middle());
        return f;
    }
    // detour: thicken the source by a cylinder of the identity first
    Factorization cyl = cylinderFactor(ChainMap::identity(m.source()));
    Factorization cocyl = cocylinderFactor(lscat::compose(m, cyl.second));
    guard(cocyl.middle());
    Factorization out;
    out.first = lscat::compose(cocyl.first, cyl.first);
    out.second = cocyl.second;
    out.kind = Factorization::Kind::FType;
    return out;
}

Factorization ChainInstance::cFactorize(const Morphism& m) const {
    Factorization f = cylinderFactor(m);
    guard(f.middle());
    return f;
}

ChainInstance::Pullback ChainInstance::pullbackAlongFibration(const Morphism& f,
                                                              const Morphism& p) const {
    Pullback pb = pullback(f, p);
    guard(pb.obj);
    return pb;
}

ChainInstance::Pushout ChainInstance::pushoutAlongCofibration(const Morphism& i,
                                                              const Morphism& g) const {
    Pushout po = pushout(i, g);
    guard(po.obj);
    return po;
}

std::optional<ChainMap> ChainInstance::lift(const LiftSquare<ChainMap>& sq) const {
    MapSolver solver(sq.left.target(), sq.right.source());
    solver.requireRightComposite(sq.left, sq.top);     // h * left = top
    solver.requireLeftComposite(sq.right, sq.bottom);  // right * h = bottom
    return solver.solve();
}

std::pair<Complex, ChainMap> ChainInstance::cofibrantReplace(const Object& x) const {
    if (cfg_.replacement == ChainInstanceConfig::Replacement::Identity)
        return {x, ChainMap::identity(x)};
    Factorization cyl = cylinderFactor(ChainMap::identity(x));
    guard(cyl.middle());
    return {cyl.middle(), cyl.second};  // trivial fibration QX ->> X
}

std::pair<Complex, ChainMap> ChainInstance::fibrantReplace(const Object& x) const {
    if (cfg_.replacement == ChainInstanceConfig::Replacement::Identity)
        return {x, ChainMap::identity(x)};
    Factorization cocyl = cocylinderFactor(ChainMap::identity(x));
    guard(cocyl.middle());
    return {cocyl.middle(), cocyl.first};  // trivial cofibration X >-> RX
}

ChainMap ChainInstance::replaceMapCofibrant(const Morphism& f) const {
    if (cfg_.replacement == ChainInstanceConfig::Replacement::Identity) return f;
    return inducedCylinderMap(ChainMap::identity(f.source()), ChainMap::identity(f.target()), f, f);
}

ChainMap ChainInstance::replaceMapFibrant(const Morphism& f) const {
    if (cfg_.replacement == ChainInstanceConfig::Replacement::Identity) return f;
    return inducedCocylinderMap(ChainMap::identity(f.source()), ChainMap::identity(f.target()), f, f);
}

ChainMap ChainInstance::inducedFFactorizationMap(const Morphism& f, const Morphism& fPrime,
                                                 const Morphism& phiX, const Morphism& phiY) const {
    if (cfg_.fFactStrategy == ChainInstanceConfig::FFactStrategy::Cocylinder)
        return inducedCocylinderMap(f, fPrime, phiX, phiY);
    ChainMap idX = ChainMap::identity(f.source());
    ChainMap idX2 = ChainMap::identity(fPrime.source());
    ChainMap cylPhi = inducedCylinderMap(idX, idX2, phiX, phiX);
    Factorization cylF = cylinderFactor(idX);
    Factorization cylF2 = cylinderFactor(idX2);
    return inducedCocylinderMap(lscat::compose(f, cylF.second), lscat::compose(fPrime, cylF2.second),
                                cylPhi, phiY);
}

ChainMap ChainInstance::inducedCFactorizationMap(const Morphism& f, const Morphism& fPrime,
                                                 const Morphism& phiX, const Morphism& phiY) const {
    return inducedCylinderMap(f, fPrime, phiX, phiY);
}

std::vector<ChainMap> ChainInstance::dominationCandidates(const Object& x, const Object& y,
                                                          const Object& qx, const Morphism& pX,
                                                          const Object& ry, const Morphism& iY) const {
    std::vector<ChainMap> out;
    if (x == y) out.push_back(lscat::compose(iY, pX));  // QX ->> X >-> RX

    HomologyData hq = computeHomology(qx);
    HomologyData hr = computeHomology(ry);
    bool dimsDominate = true;
    for (int n : hr.hComplex.support())
        if (hq.hComplex.dim(n) < hr.hComplex.dim(n)) dimsDominate = false;
    if (dimsDominate) {
        // surject chosen homology coordinates and include back along
        // cycle representatives
        std::map<int, Mat> sel;
        for (int n : hr.hComplex.support())
            sel[n] = Mat::fromBlocks({hr.hComplex.dim(n)}, {hr.hComplex.dim(n),
                                                            hq.hComplex.dim(n) - hr.hComplex.dim(n)},
                                     {{Mat::identity(hr.hComplex.dim(n)), Mat()}});
        ChainMap select = ChainMap::create(hq.hComplex, hr.hComplex, std::move(sel));
        out.push_back(lscat::compose(hr.reps, lscat::compose(select, hq.proj)));
    }

    // exhaustive sweep over coefficient combinations in {-1, 0, 1} of the
    // chain-map space, capped by the configured budget
    out.push_back(ChainMap::zero(qx, ry));
    HomSpace hom = homSpace(qx, ry);
    int k = hom.dimension();
    if (k > 0) {
        long long total = 1;
        for (int i = 0; i < k && total <= cfg_.dominationBudget; ++i) total *= 3;
        long long cap = std::min<long long>(total, cfg_.dominationBudget);
        for (long long code = 1; code < cap; ++code) {
            std::vector<Rational> coeffs(k);
            long long c = code;
            for (int i = 0; i < k; ++i) {
                coeffs[i] = Rational(static_cast<int>(c % 3) - 1);
                c /= 3;
            }
            out.push_back(hom.fromCoefficients(coeffs));
        }
    }
    return out;
}

bool ChainInstance::weakSectionOracle(const Morphism& g) const {
    HomologyData hc = computeHomology(g.source());
    HomologyData hb = computeHomology(g.target());
    for (int n : hb.hComplex.support()) {
        Mat induced = inducedHomologyMap(g, hc, hb, n);
        if (rank(induced) < hb.hComplex.dim(n)) return false;
    }
    return true;
}

bool ChainInstance::dominationOracle(const Object& x, const Object& y) const {
    GradedDims hx = homologyDims(x), hy = homologyDims(y);
    for (int n : hy.support())
        if (hx.at(n) < hy.at(n)) return false;
    return true;
}

int ChainInstance::catOracle(const Object& x) const {
    return homologyDims(x).entries.empty() ? 0 : 1;
}

}  // namespace lscat
