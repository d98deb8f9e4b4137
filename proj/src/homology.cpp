#include "lscat/homology.hpp"

#include <stdexcept>

#include "lscat/linsolve.hpp"

namespace lscat {

GradedDims homologyDims(const Complex& x) {
    GradedDims h;
    for (int n : x.support()) {
        int kerDim = x.dim(n) - rank(x.d(n));
        int imgDim = rank(x.d(n + 1));
        h.set(n, kerDim - imgDim);
    }
    return h;
}

HomologyData computeHomology(const Complex& x) {
    GradedDims hdims;
    std::map<int, Mat> repComps, projComps;
    for (int n : x.support()) {
        Mat Z = kernelBasis(x.d(n));  // dim(n) x z
        int z = Z.cols();
        // boundaries in cycle coordinates
        auto coords = solveLinear(Z, x.d(n + 1));
        if (!coords) throw std::logic_error("computeHomology: boundaries outside cycles (d*d != 0?)");
        Mat S = columnSpaceBasis(*coords);  // z x r
        Mat T = complementBasis(S);         // z x h
        int h = T.cols();
        hdims.set(n, h);
        if (h == 0) continue;
        Mat U = Mat::hcat(S, T);
        Mat piH = inverse(U).rowRange(S.cols(), h);  // h x z, kills S, identity on T
        repComps[n] = Z * T;                         // dim(n) x h
        // cycle-coordinate extraction: first z rows of [Z | completion]^{-1}
        Mat TX = complementBasis(Z);
        Mat UX = Mat::hcat(Z, TX);
        Mat coordsZ = inverse(UX).rowRange(0, z);  // z x dim(n)
        projComps[n] = piH * coordsZ;              // h x dim(n)
    }
    Complex hComplex = Complex::create(hdims, {});
    HomologyData out;
    out.reps = ChainMap::create(hComplex, x, std::move(repComps));
    out.proj = ChainMap::create(x, std::move(hComplex), std::move(projComps));
    out.hComplex = out.reps.source();
    return out;
}

Mat inducedHomologyMap(const ChainMap& f, const HomologyData& hSource, const HomologyData& hTarget,
                       int degree) {
    return hTarget.proj.comp(degree) * f.comp(degree) * hSource.reps.comp(degree);
}

bool isQuasiIso(const ChainMap& f) {
    HomologyData hs = computeHomology(f.source());
    HomologyData ht = computeHomology(f.target());
    if (hs.hComplex.dims() != ht.hComplex.dims()) return false;
    for (int n : hs.hComplex.support()) {
        Mat m = inducedHomologyMap(f, hs, ht, n);
        if (rank(m) < hs.hComplex.dim(n)) return false;
    }
    return true;
}

std::optional<std::vector<ZigzagLeg>> areWeaklyEquivalent(const Complex& x, const Complex& y) {
    HomologyData hx = computeHomology(x);
    HomologyData hy = computeHomology(y);
    if (hx.hComplex != hy.hComplex) return std::nullopt;
    std::vector<ZigzagLeg> legs;
    legs.push_back({hx.reps, false});  // X <- H
    legs.push_back({hy.reps, true});   // H -> Y
    return legs;
}

}  // namespace lscat
