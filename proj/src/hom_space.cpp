#include "lscat/hom_space.hpp"

#include "lscat/linsolve.hpp"

namespace lscat {

HomSpace homSpace(const Complex& s, const Complex& t) {
    HomSpace out;
    out.source = s;
    out.target = t;
    out.offset = {0};
    std::map<int, bool> degs;
    for (int n : s.support()) degs[n] = true;
    for (int n : t.support()) degs[n] = true;
    for (const auto& [n, _] : degs) {
        if (s.dim(n) > 0 && t.dim(n) > 0) {
            out.index[n] = out.shapes.size();
            out.shapes.push_back({t.dim(n), s.dim(n)});
            out.offset.push_back(out.offset.back() + t.dim(n) * s.dim(n));
        }
    }
    int nVars = out.offset.back();
    if (nVars == 0) {
        out.basis = Mat::zero(0, 0);
        return out;
    }
    std::vector<AffineConstraint> eqs;
    for (const auto& [n, _] : degs) {
        int rows = t.dim(n - 1), cols = s.dim(n);
        if (rows == 0 || cols == 0) continue;
        AffineConstraint eq;
        eq.constant = Mat::zero(rows, cols);
        if (auto it = out.index.find(n); it != out.index.end())
            eq.terms.push_back({it->second, t.d(n), Mat::identity(cols)});
        if (auto it = out.index.find(n - 1); it != out.index.end())
            eq.terms.push_back({it->second, -Mat::identity(rows), s.d(n)});
        if (!eq.terms.empty()) eqs.push_back(std::move(eq));
    }
    int nEqs = 0;
    for (const auto& eq : eqs) nEqs += eq.constant.rows() * eq.constant.cols();
    Mat system(nEqs, nVars);
    int row0 = 0;
    for (const auto& eq : eqs) {
        int r = eq.constant.rows(), c = eq.constant.cols();
        for (const auto& term : eq.terms) {
            auto [ur, uc] = out.shapes[term.unknown];
            for (int i = 0; i < r; ++i)
                for (int a = 0; a < ur; ++a) {
                    const Rational& l = term.left.at(i, a);
                    if (l.isZero()) continue;
                    for (int b = 0; b < uc; ++b)
                        for (int j = 0; j < c; ++j) {
                            const Rational& rr = term.right.at(b, j);
                            if (!rr.isZero())
                                system.at(row0 + i * c + j, out.offset[term.unknown] + a * uc + b) +=
                                    l * rr;
                        }
                }
        }
        row0 += r * c;
    }
    out.basis = kernelBasis(system);
    return out;
}

ChainMap HomSpace::fromFlat(const Mat& flatColumn) const {
    std::map<int, Mat> comps;
    for (const auto& [n, k] : index) {
        auto [ur, uc] = shapes[k];
        Mat m(ur, uc);
        for (int a = 0; a < ur; ++a)
            for (int b = 0; b < uc; ++b) m.at(a, b) = flatColumn.at(offset[k] + a * uc + b, 0);
        comps[n] = std::move(m);
    }
    return ChainMap::create(source, target, std::move(comps));
}

ChainMap HomSpace::fromCoefficients(const std::vector<Rational>& coeffs) const {
    Mat flat(offset.back(), 1);
    for (int k = 0; k < basis.cols(); ++k) {
        if (coeffs[k].isZero()) continue;
        for (int i = 0; i < offset.back(); ++i) flat.at(i, 0) += coeffs[k] * basis.at(i, k);
    }
    return fromFlat(flat);
}

}  // namespace lscat
