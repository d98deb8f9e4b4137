#pragma once

#include <map>

#include "lscat/complex.hpp"

namespace lscat {

// Degreewise matrices commuting with the differentials. Missing degrees
// denote zero blocks.
class ChainMap {
public:
    ChainMap() = default;
    // Shape-checks the components; commutation is checked by validate().
    static ChainMap create(Complex source, Complex target, std::map<int, Mat> comps);
    static ChainMap identity(const Complex& x);
    static ChainMap zero(const Complex& source, const Complex& target);

    const Complex& source() const { return source_; }
    const Complex& target() const { return target_; }
    Mat comp(int n) const;

    bool operator==(const ChainMap& o) const;
    bool operator!=(const ChainMap& o) const { return !(*this == o); }

private:
    Complex source_, target_;
    std::map<int, Mat> comps_;  // kept only where both endpoint dims are nonzero
};

// Commutes-with-differentials check; names the first failing degree.
ValidationReport validate(const ChainMap& f);

ChainMap compose(const ChainMap& g, const ChainMap& f);  // g after f
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap negate(const ChainMap& f);

bool isDegreewiseInjective(const ChainMap& f);
bool isDegreewiseSurjective(const ChainMap& f);

ChainMap dualizeMap(const ChainMap& f);  // f: X->Y gives f*: Y*->X*

}  // namespace lscat
