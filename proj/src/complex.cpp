#include "lscat/complex.hpp"

#include <stdexcept>

namespace lscat {

void GradedDims::set(int n, int dim) {
    if (dim < 0) throw std::invalid_argument("GradedDims: negative dimension");
    if (dim == 0)
        entries.erase(n);
    else
        entries[n] = dim;
}

std::vector<int> GradedDims::support() const {
    std::vector<int> out;
    out.reserve(entries.size());
    for (const auto& [n, _] : entries) out.push_back(n);
    return out;
}

int GradedDims::totalDim() const {
    int t = 0;
    for (const auto& [_, d] : entries) t += d;
    return t;
}

std::string GradedDims::str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [n, d] : entries) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(n) + ":" + std::to_string(d);
    }
    return s + "}";
}

Complex Complex::create(GradedDims dims, std::map<int, Mat> diffs) {
    Complex x;
    // drop zero dims defensively
    for (auto& [n, d] : dims.entries)
        if (d < 0) throw std::invalid_argument("Complex: negative dimension");
    x.dims_ = std::move(dims);
    for (auto& [n, m] : diffs) {
        int rows = x.dims_.at(n - 1), cols = x.dims_.at(n);
        if (m.rows() != rows || m.cols() != cols)
            throw std::invalid_argument("Complex: differential at degree " + std::to_string(n) +
                                        " has shape " + std::to_string(m.rows()) + "x" +
                                        std::to_string(m.cols()) + ", expected " + std::to_string(rows) +
                                        "x" + std::to_string(cols));
        if (rows > 0 && cols > 0) x.diff_[n] = std::move(m);
    }
    return x;
}

Complex Complex::sphere(int n) {
    GradedDims d;
    d.set(n, 1);
    return create(d, {});
}

Complex Complex::disc(int n) {
    GradedDims d;
    d.set(n, 1);
    d.set(n - 1, 1);
    return create(d, {{n, Mat::identity(1)}});
}

Mat Complex::d(int n) const {
    auto it = diff_.find(n);
    if (it != diff_.end()) return it->second;
    return Mat::zero(dims_.at(n - 1), dims_.at(n));
}

int Complex::minDegree() const { return dims_.entries.empty() ? 0 : dims_.entries.begin()->first; }

int Complex::maxDegree() const { return dims_.entries.empty() ? 0 : dims_.entries.rbegin()->first; }

bool Complex::operator==(const Complex& o) const {
    if (dims_ != o.dims_) return false;
    for (const auto& [n, _] : dims_.entries)
        if (d(n) != o.d(n)) return false;
    return true;
}

ValidationReport validate(const Complex& x) {
    for (int n : x.support()) {
        Mat dn = x.d(n);
        Mat dprev = x.d(n - 1);
        Mat sq = dprev * dn;
        if (!sq.isZero())
            return {false, n, "d*d != 0 leaving degree " + std::to_string(n)};
    }
    return {};
}

Complex directSum(const Complex& x, const Complex& y) {
    GradedDims dims;
    std::map<int, Mat> diffs;
    std::map<int, int> degrees;
    for (int n : x.support()) degrees[n] = 1;
    for (int n : y.support()) degrees[n] = 1;
    for (const auto& [n, _] : degrees) dims.set(n, x.dim(n) + y.dim(n));
    for (const auto& [n, _] : degrees) {
        int rows = dims.at(n - 1), cols = dims.at(n);
        if (rows == 0 || cols == 0) continue;
        diffs[n] = Mat::fromBlocks({x.dim(n - 1), y.dim(n - 1)}, {x.dim(n), y.dim(n)},
                                   {{x.d(n), Mat()}, {Mat(), y.d(n)}});
    }
    return Complex::create(dims, diffs);
}

Complex shift(const Complex& x, int k) {
    GradedDims dims;
    std::map<int, Mat> diffs;
    Rational sign(k % 2 == 0 ? 1 : -1);
    for (int n : x.support()) dims.set(n + k, x.dim(n));
    for (int n : x.support()) {
        if (x.dim(n) == 0 || x.dim(n - 1) == 0) continue;
        diffs[n + k] = x.d(n).scaled(sign);
    }
    return Complex::create(dims, diffs);
}

Complex dualize(const Complex& x) {
    GradedDims dims;
    std::map<int, Mat> diffs;
    for (int n : x.support()) dims.set(-n, x.dim(n));
    // d*(n) : (X_{-n})* -> (X_{-n+1})* is the transpose of d_{-n+1}
    for (int n : x.support()) {
        int m = -n;  // degree in the dual
        Mat t = x.d(-m + 1).transpose();
        if (t.rows() > 0 && t.cols() > 0) diffs[m] = std::move(t);
    }
    return Complex::create(dims, diffs);
}

}  // namespace lscat
