#pragma once

#include <optional>
#include <vector>

#include "lscat/chain_map.hpp"

namespace lscat {

// dim H_n = dim ker d_n - rank d_{n+1}, degree by degree.
GradedDims homologyDims(const Complex& x);

// Chosen cycle-representative data for a complex: the homology complex H
// (zero differential) together with reps: H -> X landing in cycles and
// proj: X -> H killing boundaries, with proj
//  - restricted to cycles computing the homology class, and
//  - satisfying proj * reps = id.
// Both legs are quasi-isomorphisms; bases are deterministic.
struct HomologyData {
    Complex hComplex;
    ChainMap reps;  // H -> X
    ChainMap proj;  // X -> H
};

HomologyData computeHomology(const Complex& x);

// Matrix of H_n(f) in the chosen bases.
Mat inducedHomologyMap(const ChainMap& f, const HomologyData& hSource, const HomologyData& hTarget,
                       int degree);

// True iff f induces an isomorphism on homology in every degree, decided by
// exact rank computations on the induced maps between cycle/boundary quotients.
bool isQuasiIso(const ChainMap& f);

struct ZigzagLeg {
    ChainMap map;
    bool pointsRight;  // arrow direction when reading the chain left-to-right
};

// When graded homology dimensions agree, the explicit chain
//   X <- H(X) = H(Y) -> Y
// built from cycle-representative inclusions; each leg is a quasi-isomorphism,
// so the returned value certifies itself. Absent otherwise.
std::optional<std::vector<ZigzagLeg>> areWeaklyEquivalent(const Complex& x, const Complex& y);

}  // namespace lscat
