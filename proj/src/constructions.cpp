#include "lscat/constructions.hpp"

#include <stdexcept>

#include "lscat/linsolve.hpp"

namespace lscat {

namespace {

std::vector<int> unionSupport(const Complex& x, const Complex& y, int extraLow = 0, int extraHigh = 0) {
    std::map<int, bool> degs;
    for (int n : x.support()) degs[n] = true;
    for (int n : y.support()) degs[n] = true;
    if (degs.empty()) return {};
    int lo = degs.begin()->first - extraLow, hi = degs.rbegin()->first + extraHigh;
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

}  // namespace

ConeData cone(const Complex& x) {
    GradedDims dims;
    std::map<int, Mat> diffs;
    std::vector<int> degs = unionSupport(x, x, 0, 1);
    for (int n : degs) dims.set(n, x.dim(n) + x.dim(n - 1));
    for (int n : degs) {
        if (dims.at(n) == 0 || dims.at(n - 1) == 0) continue;
        diffs[n] = Mat::fromBlocks({x.dim(n - 1), x.dim(n - 2)}, {x.dim(n), x.dim(n - 1)},
                                   {{x.d(n), -Mat::identity(x.dim(n - 1))}, {Mat(), -x.d(n - 1)}});
    }
    Complex c = Complex::create(dims, diffs);
    std::map<int, Mat> inclComps;
    for (int n : x.support())
        inclComps[n] = Mat::fromBlocks({x.dim(n), x.dim(n - 1)}, {x.dim(n)},
                                       {{Mat::identity(x.dim(n))}, {Mat()}});
    ConeData out;
    out.incl = ChainMap::create(x, c, std::move(inclComps));
    out.collapse = ChainMap::zero(c, Complex::zero());
    out.obj = std::move(c);
    return out;
}

Factorization cylinderFactor(const ChainMap& f) {
    const Complex& x = f.source();
    const Complex& y = f.target();
    GradedDims dims;
    std::map<int, Mat> diffs;
    std::vector<int> degs = unionSupport(x, y, 0, 1);
    for (int n : degs) dims.set(n, x.dim(n) + x.dim(n - 1) + y.dim(n));
    for (int n : degs) {
        if (dims.at(n) == 0 || dims.at(n - 1) == 0) continue;
        diffs[n] = Mat::fromBlocks(
            {x.dim(n - 1), x.dim(n - 2), y.dim(n - 1)}, {x.dim(n), x.dim(n - 1), y.dim(n)},
            {{x.d(n), -Mat::identity(x.dim(n - 1)), Mat()},
             {Mat(), -x.d(n - 1), Mat()},
             {Mat(), f.comp(n - 1), y.d(n)}});
    }
    Complex m = Complex::create(dims, diffs);
    std::map<int, Mat> iComps, sComps;
    for (int n : x.support())
        iComps[n] = Mat::fromBlocks({x.dim(n), x.dim(n - 1), y.dim(n)}, {x.dim(n)},
                                    {{Mat::identity(x.dim(n))}, {Mat()}, {Mat()}});
    for (int n : degs) {
        if (y.dim(n) == 0 || m.dim(n) == 0) continue;
        sComps[n] = Mat::fromBlocks({y.dim(n)}, {x.dim(n), x.dim(n - 1), y.dim(n)},
                                    {{f.comp(n), Mat(), Mat::identity(y.dim(n))}});
    }
    Factorization out;
    out.first = ChainMap::create(x, m, std::move(iComps));
    out.second = ChainMap::create(std::move(m), y, std::move(sComps));
    out.kind = Factorization::Kind::CType;
    return out;
}

Factorization cocylinderFactor(const ChainMap& f) {
    const Complex& x = f.source();
    const Complex& y = f.target();
    GradedDims dims;
    std::map<int, Mat> diffs;
    std::vector<int> degs = unionSupport(x, y, 1, 0);
    for (int n : degs) dims.set(n, x.dim(n) + y.dim(n) + y.dim(n + 1));
    for (int n : degs) {
        if (dims.at(n) == 0 || dims.at(n - 1) == 0) continue;
        diffs[n] = Mat::fromBlocks(
            {x.dim(n - 1), y.dim(n - 1), y.dim(n)}, {x.dim(n), y.dim(n), y.dim(n + 1)},
            {{x.d(n), Mat(), Mat()},
             {Mat(), y.d(n), Mat()},
             {-f.comp(n), Mat::identity(y.dim(n)), -y.d(n + 1)}});
    }
    Complex e = Complex::create(dims, diffs);
    std::map<int, Mat> tComps, pComps;
    for (int n : x.support())
        tComps[n] = Mat::fromBlocks({x.dim(n), y.dim(n), y.dim(n + 1)}, {x.dim(n)},
                                    {{Mat::identity(x.dim(n))}, {f.comp(n)}, {Mat()}});
    for (int n : degs) {
        if (y.dim(n) == 0 || e.dim(n) == 0) continue;
        pComps[n] = Mat::fromBlocks({y.dim(n)}, {x.dim(n), y.dim(n), y.dim(n + 1)},
                                    {{Mat(), Mat::identity(y.dim(n)), Mat()}});
    }
    Factorization out;
    out.first = ChainMap::create(x, e, std::move(tComps));
    out.second = ChainMap::create(std::move(e), y, std::move(pComps));
    out.kind = Factorization::Kind::FType;
    return out;
}

PullbackData pullback(const ChainMap& f, const ChainMap& p) {
    if (f.target() != p.target()) throw std::invalid_argument("pullback: target mismatch");
    const Complex& a = f.source();
    const Complex& e = p.source();
    std::map<int, Mat> kernels;
    GradedDims dims;
    std::vector<int> degs = unionSupport(a, e);
    for (int n : degs) {
        Mat m = Mat::hcat(f.comp(n), -p.comp(n));
        Mat k = kernelBasis(m);
        dims.set(n, k.cols());
        kernels[n] = std::move(k);
    }
    std::map<int, Mat> diffs;
    for (int n : degs) {
        if (dims.at(n) == 0 || dims.at(n - 1) == 0) continue;
        Mat dSum = Mat::fromBlocks({a.dim(n - 1), e.dim(n - 1)}, {a.dim(n), e.dim(n)},
                                   {{a.d(n), Mat()}, {Mat(), e.d(n)}});
        auto dp = solveLinear(kernels[n - 1], dSum * kernels[n]);
        if (!dp) throw std::logic_error("pullback: differential does not preserve the kernel");
        diffs[n] = std::move(*dp);
    }
    Complex obj = Complex::create(dims, diffs);
    std::map<int, Mat> toAComps, toEComps;
    for (int n : degs) {
        if (dims.at(n) == 0) continue;
        if (a.dim(n) > 0) toAComps[n] = kernels[n].rowRange(0, a.dim(n));
        if (e.dim(n) > 0) toEComps[n] = kernels[n].rowRange(a.dim(n), e.dim(n));
    }
    PullbackData out;
    out.toA = ChainMap::create(obj, a, std::move(toAComps));
    out.toE = ChainMap::create(obj, e, std::move(toEComps));
    out.obj = std::move(obj);
    return out;
}

ChainMap mediatePullback(const PullbackData& pb, const ChainMap& u, const ChainMap& v) {
    if (u.source() != v.source() || u.target() != pb.toA.target() || v.target() != pb.toE.target())
        throw std::invalid_argument("mediatePullback: endpoint mismatch");
    const Complex& d = u.source();
    std::map<int, Mat> comps;
    for (int n : d.support()) {
        if (pb.obj.dim(n) == 0) {
            if (!u.comp(n).isZero() || !v.comp(n).isZero())
                throw std::logic_error("mediatePullback: test pair misses the pullback");
            continue;
        }
        Mat k = Mat::vcat(pb.toA.comp(n), pb.toE.comp(n));
        auto m = solveLinear(k, Mat::vcat(u.comp(n), v.comp(n)));
        if (!m) throw std::logic_error("mediatePullback: test pair does not commute");
        comps[n] = std::move(*m);
    }
    return ChainMap::create(d, pb.obj, std::move(comps));
}

PushoutData pushout(const ChainMap& i, const ChainMap& g) {
    if (i.source() != g.source()) throw std::invalid_argument("pushout: source mismatch");
    const Complex& a = i.source();
    const Complex& b = i.target();
    const Complex& c = g.target();
    GradedDims dims;
    std::map<int, Mat> projections, sections;
    std::vector<int> degs = unionSupport(b, c);
    for (int n : degs) {
        Mat m = Mat::vcat(i.comp(n), -g.comp(n));  // (b+c) x a
        Mat s = columnSpaceBasis(m);
        Mat t = complementBasis(s);
        dims.set(n, t.cols());
        if (t.cols() == 0) continue;
        Mat u = Mat::hcat(s, t);
        projections[n] = inverse(u).rowRange(s.cols(), t.cols());  // q x (b+c)
        sections[n] = std::move(t);
    }
    std::map<int, Mat> diffs;
    for (int n : degs) {
        if (dims.at(n) == 0 || dims.at(n - 1) == 0) continue;
        Mat dSum = Mat::fromBlocks({b.dim(n - 1), c.dim(n - 1)}, {b.dim(n), c.dim(n)},
                                   {{b.d(n), Mat()}, {Mat(), c.d(n)}});
        diffs[n] = projections[n - 1] * dSum * sections[n];
    }
    Complex obj = Complex::create(dims, diffs);
    std::map<int, Mat> fromBComps, fromCComps;
    for (int n : degs) {
        if (dims.at(n) == 0) continue;
        if (b.dim(n) > 0) fromBComps[n] = projections[n].colRange(0, b.dim(n));
        if (c.dim(n) > 0) fromCComps[n] = projections[n].colRange(b.dim(n), c.dim(n));
    }
    PushoutData out;
    out.fromB = ChainMap::create(b, obj, std::move(fromBComps));
    out.fromC = ChainMap::create(c, obj, std::move(fromCComps));
    out.section = std::move(sections);
    out.obj = std::move(obj);
    return out;
}

ChainMap mediatePushout(const PushoutData& po, const ChainMap& u, const ChainMap& v) {
    if (u.target() != v.target() || u.source() != po.fromB.source() || v.source() != po.fromC.source())
        throw std::invalid_argument("mediatePushout: endpoint mismatch");
    const Complex& d = u.target();
    std::map<int, Mat> comps;
    for (int n : po.obj.support()) {
        if (d.dim(n) == 0) continue;
        comps[n] = Mat::hcat(u.comp(n), v.comp(n)) * po.section.at(n);
    }
    return ChainMap::create(po.obj, d, std::move(comps));
}

SumData sumWithMaps(const Complex& x, const Complex& y) {
    SumData out;
    out.obj = directSum(x, y);
    std::map<int, Mat> inL, inR, prL, prR;
    for (int n : out.obj.support()) {
        int dx = x.dim(n), dy = y.dim(n);
        if (dx > 0) {
            inL[n] = Mat::fromBlocks({dx, dy}, {dx}, {{Mat::identity(dx)}, {Mat()}});
            prL[n] = Mat::fromBlocks({dx}, {dx, dy}, {{Mat::identity(dx), Mat()}});
        }
        if (dy > 0) {
            inR[n] = Mat::fromBlocks({dx, dy}, {dy}, {{Mat()}, {Mat::identity(dy)}});
            prR[n] = Mat::fromBlocks({dy}, {dx, dy}, {{Mat(), Mat::identity(dy)}});
        }
    }
    out.inLeft = ChainMap::create(x, out.obj, std::move(inL));
    out.inRight = ChainMap::create(y, out.obj, std::move(inR));
    out.projLeft = ChainMap::create(out.obj, x, std::move(prL));
    out.projRight = ChainMap::create(out.obj, y, std::move(prR));
    return out;
}

ChainMap inducedCylinderMap(const ChainMap& f, const ChainMap& fPrime, const ChainMap& phiX,
                            const ChainMap& phiY) {
    if (compose(fPrime, phiX) != compose(phiY, f))
        throw std::invalid_argument("inducedCylinderMap: square does not commute");
    Factorization a = cylinderFactor(f);
    Factorization b = cylinderFactor(fPrime);
    const Complex& x = f.source();
    const Complex& y = f.target();
    const Complex& x2 = fPrime.source();
    const Complex& y2 = fPrime.target();
    std::map<int, Mat> comps;
    for (int n : a.middle().support()) {
        if (b.middle().dim(n) == 0) continue;
        comps[n] = Mat::fromBlocks({x2.dim(n), x2.dim(n - 1), y2.dim(n)},
                                   {x.dim(n), x.dim(n - 1), y.dim(n)},
                                   {{phiX.comp(n), Mat(), Mat()},
                                    {Mat(), phiX.comp(n - 1), Mat()},
                                    {Mat(), Mat(), phiY.comp(n)}});
    }
    return ChainMap::create(a.middle(), b.middle(), std::move(comps));
}

ChainMap inducedCocylinderMap(const ChainMap& f, const ChainMap& fPrime, const ChainMap& phiX,
                              const ChainMap& phiY) {
    if (compose(fPrime, phiX) != compose(phiY, f))
        throw std::invalid_argument("inducedCocylinderMap: square does not commute");
    Factorization a = cocylinderFactor(f);
    Factorization b = cocylinderFactor(fPrime);
    const Complex& x = f.source();
    const Complex& y = f.target();
    const Complex& x2 = fPrime.source();
    const Complex& y2 = fPrime.target();
    std::map<int, Mat> comps;
    for (int n : a.middle().support()) {
        if (b.middle().dim(n) == 0) continue;
        comps[n] = Mat::fromBlocks({x2.dim(n), y2.dim(n), y2.dim(n + 1)},
                                   {x.dim(n), y.dim(n), y.dim(n + 1)},
                                   {{phiX.comp(n), Mat(), Mat()},
                                    {Mat(), phiY.comp(n), Mat()},
                                    {Mat(), Mat(), phiY.comp(n + 1)}});
    }
    return ChainMap::create(a.middle(), b.middle(), std::move(comps));
}

}  // namespace lscat
