#pragma once

#include <json.hpp>

#include "lscat/axiom_check.hpp"
#include "lscat/chain_instance.hpp"
#include "lscat/engine.hpp"

// One textual document format for the whole repository: complexes, chain
// maps, factorizations, certificates, towers, zigzags and axiom reports.
// Rational entries serialize as "p/q" or the integer shorthand "n"; matrices
// are row-major arrays of arrays, shape-checked on load. Emission is
// canonical, so identical values produce identical bytes.

namespace lscat::io {

using nlohmann::json;

json toJson(const Rational& r);
json toJson(const Mat& m);
json toJson(const GradedDims& d);
json toJson(const Complex& x);
json toJson(const ChainMap& f);
json toJson(const Factorization& f);
json toJson(const LiftingWitness<ChainInstance>& w);
json toJson(const DominationWitness<ChainInstance>& w);
json toJson(const CofibreSequenceData<ChainInstance>& cs);
json toJson(const IndcatCertificate<ChainInstance>& cert);
json toJson(const SectionSynthesis<ChainInstance>& synth);
json toJson(const AxiomReport& rep);
json zigzagToJson(const std::vector<ZigzagLeg>& legs);

Rational rationalFromJson(const json& j);
Mat matFromJson(const json& j, int rows, int cols);
Complex complexFromJson(const json& j);
ChainMap chainMapFromJson(const json& j);
Factorization factorizationFromJson(const json& j);
LiftingWitness<ChainInstance> liftingWitnessFromJson(const json& j);
DominationWitness<ChainInstance> dominationWitnessFromJson(const json& j);
// Rebuilds the cached pushout from the stored f; the stored legs are kept
// verbatim so an independent verifier sees exactly what the document says.
CofibreSequenceData<ChainInstance> cofibreSequenceFromJson(const ChainInstance& cat, const json& j);
IndcatCertificate<ChainInstance> certificateFromJson(const ChainInstance& cat, const json& j);

std::string dumpDocument(const json& j);  // canonical rendering with trailing newline
json parseDocument(const std::string& text);

}  // namespace lscat::io
