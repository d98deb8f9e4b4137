#pragma once

#include <map>

#include "lscat/chain_map.hpp"

namespace lscat {

// A middle object with two composable maps. kind records which class contract
// the legs satisfy:
//   FType: first is a weak equivalence, second a fibration   (f = p * tau)
//   CType: first is a cofibration, second a weak equivalence  (f = sigma * i)
// The canonical chain-level factorizations below deliver the stronger (M2)
// classes (trivial cofibration / trivial fibration legs).
struct Factorization {
    enum class Kind { FType, CType };
    ChainMap first;
    ChainMap second;
    Kind kind = Kind::FType;

    const Complex& middle() const { return first.target(); }
    ChainMap composite() const { return compose(second, first); }
};

// Block conventions, fixed once and pinned by d*d = 0 plus the class
// predicates (any self-consistent standard choice would do):
//
//   cone(X):      C_n = X_n + X_{n-1},        d(x, x') = (dx - x', -dx')
//   Cyl(f:X->Y):  M_n = X_n + X_{n-1} + Y_n,  d(x, x', y) = (dx - x', -dx', dy + f x')
//                 i(x) = (x, 0, 0),           sigma(x, x', y) = f x + y
//   Cocyl(f:X->Y): E_n = X_n + Y_n + Y_{n+1}, d(x, y, z) = (dx, dy, -dz + y - f x)
//                 tau(x) = (x, f x, 0),       p(x, y, z) = y

struct ConeData {
    Complex obj;        // acyclic
    ChainMap incl;      // X >-> cone(X), degreewise injective
    ChainMap collapse;  // cone(X) -> 0
};

ConeData cone(const Complex& x);

// Mapping-cylinder C-factorization f = sigma * i with i a cofibration and
// sigma a trivial fibration.
Factorization cylinderFactor(const ChainMap& f);

// Mapping-cocylinder (path object) F-factorization f = p * tau with tau a
// trivial cofibration and p a fibration.
Factorization cocylinderFactor(const ChainMap& f);

// Degreewise kernel of (f, -p) inside the direct sum; the square commutes
// exactly and mediatePullback realizes the universal property.
struct PullbackData {
    Complex obj;
    ChainMap toA;  // base extension of p, P -> A
    ChainMap toE;  // base extension of f, P -> E
};

PullbackData pullback(const ChainMap& f, const ChainMap& p);  // common target required

// Unique m with toA * m = u and toE * m = v; throws std::logic_error if the
// test pair does not commute.
ChainMap mediatePullback(const PullbackData& pb, const ChainMap& u, const ChainMap& v);

// Degreewise cokernel of (i, -g) out of the direct sum, with deterministic
// quotient bases; section stores the chosen splitting used by the mediator.
struct PushoutData {
    Complex obj;
    ChainMap fromB;              // cobase extension of g, B -> Q
    ChainMap fromC;              // cobase extension of i, C -> Q
    std::map<int, Mat> section;  // right inverse of the quotient projection
};

PushoutData pushout(const ChainMap& i, const ChainMap& g);  // common source required

// Unique m with m * fromB = u and m * fromC = v.
ChainMap mediatePushout(const PushoutData& po, const ChainMap& u, const ChainMap& v);

struct SumData {
    Complex obj;
    ChainMap inLeft, inRight;      // inclusions
    ChainMap projLeft, projRight;  // projections
};

SumData sumWithMaps(const Complex& x, const Complex& y);

// Functoriality of the factorizations: given f' * phiX = phiY * f, the induced
// block-diagonal map between the cylinder (resp. cocylinder) middles. Commutes
// with both factorization legs.
ChainMap inducedCylinderMap(const ChainMap& f, const ChainMap& fPrime, const ChainMap& phiX,
                            const ChainMap& phiY);
ChainMap inducedCocylinderMap(const ChainMap& f, const ChainMap& fPrime, const ChainMap& phiX,
                              const ChainMap& phiY);

}  // namespace lscat
