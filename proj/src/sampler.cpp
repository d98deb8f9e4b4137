#include "lscat/sampler.hpp"

#include <stdexcept>

#include "lscat/hom_space.hpp"
#include "lscat/map_solver.hpp"

namespace lscat {

Mat ChainSampler::randomInvertible(Rng& rng, int n) const {
    Mat u = Mat::identity(n);
    int ops = rng.uniform(0, 2 * n);
    for (int k = 0; k < ops; ++k) {
        int i = rng.uniform(0, n - 1), j = rng.uniform(0, n - 1);
        int kind = rng.uniform(0, 2);
        if (kind == 0 && i != j) {
            // row_i += c * row_j
            Rational c(rng.uniform(-2, 2));
            for (int col = 0; col < n; ++col) u.at(i, col) += c * u.at(j, col);
        } else if (kind == 1 && i != j) {
            for (int col = 0; col < n; ++col) std::swap(u.at(i, col), u.at(j, col));
        } else {
            Rational c(rng.oneIn(2) ? -1 : 2, rng.oneIn(2) ? 1 : 2);
            for (int col = 0; col < n; ++col) u.at(i, col) *= c;
        }
    }
    return u;
}

Complex ChainSampler::conjugate(Rng& rng, const Complex& x) const {
    std::map<int, Mat> u, uinv;
    for (int n : x.support()) {
        Mat m = randomInvertible(rng, x.dim(n));
        uinv[n] = inverse(m);
        u[n] = std::move(m);
    }
    auto uAt = [&](int n) {
        auto it = u.find(n);
        return it == u.end() ? Mat::identity(x.dim(n)) : it->second;
    };
    auto uinvAt = [&](int n) {
        auto it = uinv.find(n);
        return it == uinv.end() ? Mat::identity(x.dim(n)) : it->second;
    };
    std::map<int, Mat> diffs;
    for (int n : x.support()) {
        if (x.dim(n - 1) == 0) continue;
        diffs[n] = uAt(n - 1) * x.d(n) * uinvAt(n);
    }
    return Complex::create(x.dims(), diffs);
}

Complex ChainSampler::randomComplex(Rng& rng) const {
    Complex acc = Complex::zero();
    for (int n = cfg_.minDegree; n <= cfg_.maxDegree; ++n) {
        while (acc.dim(n) < cfg_.maxDimPerDegree && rng.oneIn(3))
            acc = directSum(acc, Complex::sphere(n));
        while (acc.dim(n) + 1 < cfg_.maxDimPerDegree + 1 && acc.dim(n - 1) < cfg_.maxDimPerDegree &&
               rng.oneIn(4))
            acc = directSum(acc, Complex::disc(n));
    }
    return conjugate(rng, acc);
}

Complex ChainSampler::randomAcyclicComplex(Rng& rng) const {
    Complex acc = Complex::zero();
    for (int n = cfg_.minDegree + 1; n <= cfg_.maxDegree; ++n) {
        while (acc.dim(n) < cfg_.maxDimPerDegree && acc.dim(n - 1) < cfg_.maxDimPerDegree &&
               rng.oneIn(3))
            acc = directSum(acc, Complex::disc(n));
    }
    return conjugate(rng, acc);
}

ChainMap ChainSampler::randomChainMap(Rng& rng, const Complex& s, const Complex& t) const {
    HomSpace hom = homSpace(s, t);
    if (hom.dimension() == 0) return ChainMap::zero(s, t);
    std::vector<Rational> coeffs;
    coeffs.reserve(hom.dimension());
    for (int k = 0; k < hom.dimension(); ++k)
        coeffs.emplace_back(rng.uniform(-2, 2), rng.oneIn(3) ? 2 : 1);
    return hom.fromCoefficients(coeffs);
}

std::pair<Complex, ChainMap> ChainSampler::randomIsomorphism(Rng& rng) const {
    Complex x = randomComplex(rng);
    std::map<int, Mat> u, uinv, comps, newDiffs;
    for (int n : x.support()) {
        Mat m = randomInvertible(rng, x.dim(n));
        uinv[n] = inverse(m);
        u[n] = std::move(m);
    }
    auto uAt = [&](int n) {
        auto it = u.find(n);
        return it == u.end() ? Mat::identity(x.dim(n)) : it->second;
    };
    auto uinvAt = [&](int n) {
        auto it = uinv.find(n);
        return it == uinv.end() ? Mat::identity(x.dim(n)) : it->second;
    };
    for (int n : x.support()) {
        if (x.dim(n - 1) > 0) newDiffs[n] = uAt(n - 1) * x.d(n) * uinvAt(n);
        comps[n] = uAt(n);
    }
    Complex y = Complex::create(x.dims(), std::move(newDiffs));
    return {x, ChainMap::create(x, std::move(y), std::move(comps))};
}

ChainMap ChainSampler::randomFibration(Rng& rng) const {
    if (rng.oneIn(2)) {
        Complex base = randomComplex(rng);
        Complex fibreish = randomComplex(rng);
        return sumWithMaps(base, fibreish).projLeft;
    }
    Complex target = randomComplex(rng);
    ChainMap f = randomMapInto(rng, target);
    return cocylinderFactor(f).second;
}

ChainMap ChainSampler::randomTrivialFibration(Rng& rng) const {
    if (rng.oneIn(2)) {
        Complex base = randomComplex(rng);
        Complex acyc = randomAcyclicComplex(rng);
        return sumWithMaps(base, acyc).projLeft;
    }
    Complex a = randomComplex(rng), b = randomComplex(rng);
    return cylinderFactor(randomChainMap(rng, a, b)).second;
}

ChainMap ChainSampler::randomCofibration(Rng& rng) const {
    if (rng.oneIn(2)) {
        Complex base = randomComplex(rng);
        Complex rest = randomComplex(rng);
        return sumWithMaps(base, rest).inLeft;
    }
    Complex a = randomComplex(rng), b = randomComplex(rng);
    return cylinderFactor(randomChainMap(rng, a, b)).first;
}

ChainMap ChainSampler::randomTrivialCofibration(Rng& rng) const {
    if (rng.oneIn(2)) {
        Complex base = randomComplex(rng);
        Complex acyc = randomAcyclicComplex(rng);
        return sumWithMaps(base, acyc).inLeft;
    }
    Complex a = randomComplex(rng), b = randomComplex(rng);
    return cocylinderFactor(randomChainMap(rng, a, b)).first;
}

ChainMap ChainSampler::randomWeq(Rng& rng) const {
    switch (rng.uniform(0, 2)) {
        case 0:
            return randomTrivialFibration(rng);
        case 1:
            return randomTrivialCofibration(rng);
        default:
            return randomIsomorphism(rng).second;
    }
}

std::pair<ChainMap, ChainMap> ChainSampler::randomComposablePair(Rng& rng) const {
    switch (rng.uniform(0, 3)) {
        case 0: {
            ChainMap f = randomWeq(rng);
            ChainMap g = randomMapFrom(rng, f.target());
            return {f, g};
        }
        case 1: {
            ChainMap g = randomWeq(rng);
            ChainMap f = randomMapInto(rng, g.source());
            return {f, g};
        }
        case 2: {
            ChainMap f = randomWeq(rng);
            ChainMap g = randomWeq(rng);
            // force composability through the chain-map space
            ChainMap bridge = randomChainMap(rng, f.target(), g.source());
            return {compose(bridge, f), g};
        }
        default: {
            Complex a = randomComplex(rng), b = randomComplex(rng), c = randomComplex(rng);
            return {randomChainMap(rng, a, b), randomChainMap(rng, b, c)};
        }
    }
}

std::pair<ChainMap, ChainMap> ChainSampler::randomFibrationPair(Rng& rng) const {
    Complex z = randomComplex(rng);
    Complex k1 = randomComplex(rng);
    Complex k2 = randomComplex(rng);
    SumData inner = sumWithMaps(z, k1);
    SumData outer = sumWithMaps(inner.obj, k2);
    return {outer.projLeft, inner.projLeft};  // q after p with p = outer, q = inner
}

std::pair<ChainMap, ChainMap> ChainSampler::randomCofibrationPair(Rng& rng) const {
    Complex z = randomComplex(rng);
    Complex k1 = randomComplex(rng);
    Complex k2 = randomComplex(rng);
    SumData inner = sumWithMaps(z, k1);
    SumData outer = sumWithMaps(inner.obj, k2);
    return {inner.inLeft, outer.inLeft};
}

ChainMap ChainSampler::randomMapInto(Rng& rng, const Complex& target) const {
    Complex s = randomComplex(rng);
    if (rng.oneIn(4)) {
        // weak equivalence into the target: thickening followed by projection
        Complex acyc = randomAcyclicComplex(rng);
        SumData sum = sumWithMaps(target, acyc);
        return sum.projLeft;
    }
    return randomChainMap(rng, s, target);
}

ChainMap ChainSampler::randomMapFrom(Rng& rng, const Complex& source) const {
    if (rng.oneIn(4)) {
        Complex acyc = randomAcyclicComplex(rng);
        SumData sum = sumWithMaps(source, acyc);
        return sum.inLeft;
    }
    Complex t = randomComplex(rng);
    return randomChainMap(rng, source, t);
}

ChainMap ChainSampler::randomMorphism(Rng& rng) const {
    Complex a = randomComplex(rng);
    Complex b = randomComplex(rng);
    return randomChainMap(rng, a, b);
}

SampledSquare ChainSampler::sampleLiftSquare(Rng& rng, int variant) const {
    switch (variant % 4) {
        case 0: {
            // trivial cofibration on the left; the bottom edge is the
            // guaranteed extension of p*u along it
            ChainMap i = randomTrivialCofibration(rng);
            ChainMap p = randomFibration(rng);
            ChainMap u = randomChainMap(rng, i.source(), p.source());
            MapSolver ms(i.target(), p.target());
            ms.requireRightComposite(i, compose(p, u));
            auto w = ms.solve();
            if (!w) throw std::logic_error("sampleLiftSquare: extension along trivial cofibration failed");
            return {i, u, p, *w};
        }
        case 1: {
            // trivial fibration on the right; the top edge is the guaranteed
            // lift of w*i through it
            ChainMap p = randomTrivialFibration(rng);
            ChainMap i = randomCofibration(rng);
            ChainMap w = randomChainMap(rng, i.target(), p.target());
            MapSolver ms(i.source(), p.source());
            ms.requireLeftComposite(p, compose(w, i));
            auto u = ms.solve();
            if (!u) throw std::logic_error("sampleLiftSquare: lift through trivial fibration failed");
            return {i, *u, p, w};
        }
        case 2: {
            // forces the filler to be a strict section of a trivial fibration
            ChainMap p = randomTrivialFibration(rng);
            return {ChainMap::zero(Complex::zero(), p.target()),
                    ChainMap::zero(Complex::zero(), p.source()), p, ChainMap::identity(p.target())};
        }
        default: {
            Complex x = randomComplex(rng);
            ChainMap id = ChainMap::identity(x);
            return {id, id, id, id};
        }
    }
}

}  // namespace lscat
