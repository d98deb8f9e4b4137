#include "lscat/chain_map.hpp"

#include <stdexcept>

#include "lscat/linsolve.hpp"

namespace lscat {

ChainMap ChainMap::create(Complex source, Complex target, std::map<int, Mat> comps) {
    ChainMap f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    for (auto& [n, m] : comps) {
        int rows = f.target_.dim(n), cols = f.source_.dim(n);
        if (m.rows() != rows || m.cols() != cols)
            throw std::invalid_argument("ChainMap: component at degree " + std::to_string(n) +
                                        " has shape " + std::to_string(m.rows()) + "x" +
                                        std::to_string(m.cols()) + ", expected " + std::to_string(rows) +
                                        "x" + std::to_string(cols));
        if (rows > 0 && cols > 0) f.comps_[n] = std::move(m);
    }
    return f;
}

ChainMap ChainMap::identity(const Complex& x) {
    std::map<int, Mat> comps;
    for (int n : x.support()) comps[n] = Mat::identity(x.dim(n));
    return create(x, x, std::move(comps));
}

ChainMap ChainMap::zero(const Complex& source, const Complex& target) {
    return create(source, target, {});
}

Mat ChainMap::comp(int n) const {
    auto it = comps_.find(n);
    if (it != comps_.end()) return it->second;
    return Mat::zero(target_.dim(n), source_.dim(n));
}

bool ChainMap::operator==(const ChainMap& o) const {
    if (source_ != o.source_ || target_ != o.target_) return false;
    for (int n : source_.support())
        if (comp(n) != o.comp(n)) return false;
    return true;
}

ValidationReport validate(const ChainMap& f) {
    for (int n : f.source().support()) {
        Mat lhs = f.target().d(n) * f.comp(n);
        Mat rhs = f.comp(n - 1) * f.source().d(n);
        if (lhs != rhs)
            return {false, n, "chain map does not commute with d at degree " + std::to_string(n)};
    }
    return {};
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (f.target() != g.source()) throw std::invalid_argument("compose: endpoint mismatch");
    std::map<int, Mat> comps;
    for (int n : f.source().support()) {
        if (g.target().dim(n) == 0) continue;
        comps[n] = g.comp(n) * f.comp(n);
    }
    return ChainMap::create(f.source(), g.target(), std::move(comps));
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
    if (f.source() != g.source() || f.target() != g.target())
        throw std::invalid_argument("add: endpoint mismatch");
    std::map<int, Mat> comps;
    for (int n : f.source().support()) {
        if (f.target().dim(n) == 0) continue;
        comps[n] = f.comp(n) + g.comp(n);
    }
    return ChainMap::create(f.source(), f.target(), std::move(comps));
}

ChainMap negate(const ChainMap& f) {
    std::map<int, Mat> comps;
    for (int n : f.source().support()) {
        if (f.target().dim(n) == 0) continue;
        comps[n] = -f.comp(n);
    }
    return ChainMap::create(f.source(), f.target(), std::move(comps));
}

bool isDegreewiseInjective(const ChainMap& f) {
    for (int n : f.source().support())
        if (rank(f.comp(n)) < f.source().dim(n)) return false;
    return true;
}

bool isDegreewiseSurjective(const ChainMap& f) {
    for (int n : f.target().support())
        if (rank(f.comp(n)) < f.target().dim(n)) return false;
    return true;
}

ChainMap dualizeMap(const ChainMap& f) {
    Complex ds = dualize(f.target());
    Complex dt = dualize(f.source());
    std::map<int, Mat> comps;
    for (int n : ds.support()) {
        if (dt.dim(n) == 0) continue;
        comps[n] = f.comp(-n).transpose();
    }
    return ChainMap::create(std::move(ds), std::move(dt), std::move(comps));
}

}  // namespace lscat
