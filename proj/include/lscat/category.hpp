#pragma once

#include <concepts>
#include <optional>
#include <utility>
#include <vector>

namespace lscat {

// Lifting problem
//
//        top
//    A -------> E
//    |          |
//  left       right
//    v          v
//    X -------> B
//       bottom
//
// A filler h: X -> E must satisfy h * left = top and right * h = bottom.
// Existence is guaranteed only when left is a cofibration, right is a
// fibration, and one of them is a weak equivalence; lift() is total in
// signature and optional in result.
template <class Morphism>
struct LiftSquare {
    Morphism left, top, right, bottom;
};

// The contract for a pointed category with zero object, fibrations,
// cofibrations and weak equivalences in which two-sided factorizations,
// (co)base extensions along (co)fibrations, and lifting of
// cofibration-vs-fibration squares with a trivial side are all available.
// The engine is generic over any model of this concept.
template <class C>
concept StructuredCategory = requires(const C cat, const typename C::Object& x,
                                      const typename C::Morphism& m,
                                      const LiftSquare<typename C::Morphism>& sq,
                                      const typename C::Pullback& pb, const typename C::Pushout& po) {
    typename C::Object;
    typename C::Morphism;
    typename C::Factorization;
    typename C::Pullback;
    typename C::Pushout;

    { cat.zeroObject() } -> std::same_as<typename C::Object>;
    { cat.source(m) } -> std::convertible_to<typename C::Object>;
    { cat.target(m) } -> std::convertible_to<typename C::Object>;
    { cat.identity(x) } -> std::same_as<typename C::Morphism>;
    { cat.zeroMorphism(x, x) } -> std::same_as<typename C::Morphism>;
    { cat.compose(m, m) } -> std::same_as<typename C::Morphism>;
    { cat.morphismsEqual(m, m) } -> std::same_as<bool>;
    { cat.objectsEqual(x, x) } -> std::same_as<bool>;
    { cat.validObject(x) } -> std::same_as<bool>;
    { cat.validMorphism(m) } -> std::same_as<bool>;

    { cat.isFibration(m) } -> std::same_as<bool>;
    { cat.isCofibration(m) } -> std::same_as<bool>;
    { cat.isWeq(m) } -> std::same_as<bool>;

    { cat.fFactorize(m) } -> std::same_as<typename C::Factorization>;
    { cat.cFactorize(m) } -> std::same_as<typename C::Factorization>;

    { cat.pullbackAlongFibration(m, m) } -> std::same_as<typename C::Pullback>;
    { cat.pushoutAlongCofibration(m, m) } -> std::same_as<typename C::Pushout>;
    { cat.mediatePullback(pb, m, m) } -> std::same_as<typename C::Morphism>;
    { cat.mediatePushout(po, m, m) } -> std::same_as<typename C::Morphism>;
    { cat.lift(sq) } -> std::same_as<std::optional<typename C::Morphism>>;

    { cat.cofibrantReplace(x) } -> std::same_as<std::pair<typename C::Object, typename C::Morphism>>;
    { cat.fibrantReplace(x) } -> std::same_as<std::pair<typename C::Object, typename C::Morphism>>;
    { cat.replaceMapCofibrant(m) } -> std::same_as<typename C::Morphism>;
    { cat.replaceMapFibrant(m) } -> std::same_as<typename C::Morphism>;

    // induced maps between factorization middles over a commuting square
    { cat.inducedFFactorizationMap(m, m, m, m) } -> std::same_as<typename C::Morphism>;
    { cat.inducedCFactorizationMap(m, m, m, m) } -> std::same_as<typename C::Morphism>;

    // same weak-equivalence class test at the object level
    { cat.weaklySameType(x, x) } -> std::same_as<bool>;
};

template <class C>
concept DualizableCategory = StructuredCategory<C> && requires(const C cat, const typename C::Object& x,
                                                               const typename C::Morphism& m) {
    { cat.dualizeObject(x) } -> std::same_as<typename C::Object>;
    { cat.dualizeMorphism(m) } -> std::same_as<typename C::Morphism>;
};

}  // namespace lscat
