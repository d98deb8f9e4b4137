#pragma once

#include <map>

#include "lscat/chain_map.hpp"

namespace lscat {

// The linear space of chain maps s -> t, flattened: a basis of the solution
// space of the commutation system plus the bookkeeping to reconstitute maps
// from coefficient vectors.
struct HomSpace {
    Complex source, target;
    std::vector<std::pair<int, int>> shapes;  // per unknown degree
    std::map<int, std::size_t> index;         // degree -> unknown slot
    std::vector<int> offset;                  // flat offsets, offset.back() = total entries
    Mat basis;                                // (total entries) x dimension

    int dimension() const { return basis.cols(); }
    ChainMap fromFlat(const Mat& flatColumn) const;
    ChainMap fromCoefficients(const std::vector<Rational>& coeffs) const;
};

HomSpace homSpace(const Complex& s, const Complex& t);

}  // namespace lscat
