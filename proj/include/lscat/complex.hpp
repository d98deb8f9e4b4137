#pragma once

#include <map>
#include <string>
#include <vector>

#include "lscat/matrix.hpp"

namespace lscat {

// Finite-support graded dimension vector.
struct GradedDims {
    std::map<int, int> entries;  // degree -> dimension, only nonzero kept

    int at(int n) const {
        auto it = entries.find(n);
        return it == entries.end() ? 0 : it->second;
    }
    void set(int n, int dim);
    std::vector<int> support() const;
    int totalDim() const;
    bool operator==(const GradedDims& o) const { return entries == o.entries; }
    bool operator!=(const GradedDims& o) const { return !(*this == o); }
    std::string str() const;
};

struct ValidationReport {
    bool ok = true;
    int degree = 0;
    std::string what;
};

// Finitely supported chain complex of finite-dimensional rational vector
// spaces. Homological grading: d(n) maps degree n to degree n-1, and negative
// degrees are allowed so dualization and fibre kernels never truncate.
class Complex {
public:
    Complex() = default;

    // Shape-checks every stored differential against dims; throws
    // std::invalid_argument on mismatch. d*d = 0 is checked by validate(),
    // not here, so deliberately broken fixtures can be built.
    static Complex create(GradedDims dims, std::map<int, Mat> diffs);

    static Complex zero() { return Complex(); }
    static Complex sphere(int n);  // Q in degree n, zero differential
    static Complex disc(int n);    // Q in degrees n, n-1 with identity differential

    const GradedDims& dims() const { return dims_; }
    int dim(int n) const { return dims_.at(n); }
    // Differential leaving degree n; materialized at the correct shape even
    // when absent from storage.
    Mat d(int n) const;

    std::vector<int> support() const { return dims_.support(); }
    int minDegree() const;  // 0 when empty
    int maxDegree() const;
    int totalDim() const { return dims_.totalDim(); }
    bool isZeroObject() const { return dims_.entries.empty(); }

    bool operator==(const Complex& o) const;
    bool operator!=(const Complex& o) const { return !(*this == o); }

private:
    GradedDims dims_;
    std::map<int, Mat> diff_;  // kept only where both endpoint dims are nonzero
};

// Confirms d*d = 0 and shape coherence, or names the first failing degree.
ValidationReport validate(const Complex& x);

Complex directSum(const Complex& x, const Complex& y);
Complex shift(const Complex& x, int k);    // degree n -> n+k, differential scaled by (-1)^k
Complex dualize(const Complex& x);         // (X*)_n = dual of X_{-n}, transposed differential

}  // namespace lscat
