#include "lscat/io.hpp"

#include "lscat/errors.hpp"

namespace lscat::io {

namespace {

const json& expectField(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("document missing field '") + key + "'");
    return *it;
}

int expectInt(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

int parseDegreeKey(const std::string& key) {
    try {
        std::size_t pos = 0;
        int n = std::stoi(key, &pos);
        if (pos != key.size()) throw ParseError("bad degree key '" + key + "'");
        return n;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        throw ParseError("bad degree key '" + key + "'");
    }
}

void expectType(const json& j, const char* type) {
    if (!j.is_object() || expectField(j, "type").get<std::string>() != type)
        throw ParseError(std::string("expected a document of type '") + type + "'");
}

}  // namespace

json toJson(const Rational& r) { return r.str(); }

json toJson(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json toJson(const GradedDims& d) {
    json out = json::object();
    for (const auto& [n, dim] : d.entries) out[std::to_string(n)] = dim;
    return out;
}

json toJson(const Complex& x) {
    json out;
    out["type"] = "complex";
    out["dims"] = toJson(x.dims());
    json diffs = json::object();
    for (int n : x.support()) {
        if (x.dim(n - 1) == 0) continue;
        diffs[std::to_string(n)] = toJson(x.d(n));
    }
    out["d"] = std::move(diffs);
    return out;
}

json toJson(const ChainMap& f) {
    json out;
    out["type"] = "chain_map";
    out["source"] = toJson(f.source());
    out["target"] = toJson(f.target());
    json comps = json::object();
    for (int n : f.source().support()) {
        if (f.target().dim(n) == 0) continue;
        comps[std::to_string(n)] = toJson(f.comp(n));
    }
    out["comps"] = std::move(comps);
    return out;
}

json toJson(const Factorization& f) {
    json out;
    out["type"] = "factorization";
    out["kind"] = f.kind == Factorization::Kind::FType ? "F" : "C";
    out["first"] = toJson(f.first);
    out["second"] = toJson(f.second);
    return out;
}

json toJson(const LiftingWitness<ChainInstance>& w) {
    json out;
    out["type"] = "lifting_witness";
    out["factorization"] = toJson(w.fact);
    out["lift"] = toJson(w.lift);
    return out;
}

json toJson(const DominationWitness<ChainInstance>& w) {
    json out;
    out["type"] = "domination_witness";
    out["source"] = toJson(w.source);
    out["target"] = toJson(w.target);
    out["cofibrant_source"] = toJson(w.cofibrantSource);
    out["fibrant_target"] = toJson(w.fibrantTarget);
    out["p_source"] = toJson(w.pSource);
    out["i_target"] = toJson(w.iTarget);
    out["alpha"] = toJson(w.alpha);
    out["factorization"] = toJson(w.fact);
    out["lifting"] = toJson(w.lifting);
    return out;
}

json toJson(const CofibreSequenceData<ChainInstance>& cs) {
    json out;
    out["type"] = "cofibre_sequence";
    out["f"] = toJson(cs.f);
    out["cone_incl"] = toJson(cs.coneIncl);
    out["proj"] = toJson(cs.proj);
    out["from_cone"] = toJson(cs.fromCone);
    return out;
}

json toJson(const IndcatCertificate<ChainInstance>& cert) {
    json out;
    out["type"] = "indcat_certificate";
    out["subject"] = toJson(cert.subject);
    out["value"] = cert.value;
    if (cert.base) {
        out["kind"] = "base";
        out["witness"] = toJson(*cert.base);
    } else if (cert.step) {
        out["kind"] = "step";
        out["cofibre"] = toJson(cert.step->cofibre);
        out["domination"] = toJson(cert.step->domination);
        out["inner"] = toJson(*cert.step->inner);
    } else {
        throw std::logic_error("toJson: certificate has neither base nor step");
    }
    return out;
}

json toJson(const SectionSynthesis<ChainInstance>& synth) {
    json out;
    out["type"] = "section_synthesis";
    out["level"] = synth.level;
    out["cofibre"] = toJson(synth.input);
    out["section_y"] = toJson(synth.sectionY);
    out["replaced_ganea_y"] = toJson(synth.replY);
    out["replaced_ganea_c"] = toJson(synth.replC);
    out["ganea_of_proj"] = toJson(synth.ganeaOfProj);
    out["fibre_to_cone"] = toJson(synth.fibreData.toA);
    out["fibre_to_ganea"] = toJson(synth.fibreData.toE);
    out["hat_factorization"] = toJson(synth.hatFact);
    out["mu"] = toJson(synth.ganeaPo.fromB);
    out["w"] = toJson(synth.ganeaPo.fromC);
    out["p_n"] = toJson(synth.pnC);
    out["lambda"] = toJson(synth.lambda);
    out["q_prime"] = toJson(synth.qPrime);
    out["sigma"] = toJson(synth.sigma);
    return out;
}

json toJson(const AxiomReport& rep) {
    json out;
    out["type"] = "axiom_report";
    out["axiom"] = rep.axiom;
    out["samples"] = rep.samples;
    out["seed"] = rep.seed;
    out["verdict"] = rep.pass() ? "pass" : "fail";
    json fails = json::array();
    for (const auto& f : rep.failures) {
        json e;
        e["seed"] = f.seed;
        e["what"] = f.what;
        fails.push_back(std::move(e));
    }
    out["failures"] = std::move(fails);
    return out;
}

json zigzagToJson(const std::vector<ZigzagLeg>& legs) {
    json out;
    out["type"] = "zigzag";
    json arr = json::array();
    for (const auto& leg : legs) {
        json e;
        e["points_right"] = leg.pointsRight;
        e["map"] = toJson(leg.map);
        arr.push_back(std::move(e));
    }
    out["legs"] = std::move(arr);
    return out;
}

Rational rationalFromJson(const json& j) {
    if (!j.is_string()) throw ParseError("rational entries must be strings like \"p/q\"");
    try {
        return Rational::fromString(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Mat matFromJson(const json& j, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw ParseError("matrix has " + std::to_string(j.size()) + " rows, expected " +
                         std::to_string(rows));
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("matrix row " + std::to_string(i) + " has wrong width, expected " +
                             std::to_string(cols));
        for (int c = 0; c < cols; ++c) m.at(i, c) = rationalFromJson(row[c]);
    }
    return m;
}

Complex complexFromJson(const json& j) {
    expectType(j, "complex");
    GradedDims dims;
    for (const auto& [key, value] : expectField(j, "dims").items()) {
        int n = parseDegreeKey(key);
        int d = expectInt(value, "dimension");
        if (d < 0) throw ParseError("negative dimension at degree " + key);
        dims.set(n, d);
    }
    std::map<int, Mat> diffs;
    for (const auto& [key, value] : expectField(j, "d").items()) {
        int n = parseDegreeKey(key);
        diffs[n] = matFromJson(value, dims.at(n - 1), dims.at(n));
    }
    try {
        return Complex::create(std::move(dims), std::move(diffs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

ChainMap chainMapFromJson(const json& j) {
    expectType(j, "chain_map");
    Complex src = complexFromJson(expectField(j, "source"));
    Complex tgt = complexFromJson(expectField(j, "target"));
    std::map<int, Mat> comps;
    for (const auto& [key, value] : expectField(j, "comps").items()) {
        int n = parseDegreeKey(key);
        comps[n] = matFromJson(value, tgt.dim(n), src.dim(n));
    }
    try {
        return ChainMap::create(std::move(src), std::move(tgt), std::move(comps));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Factorization factorizationFromJson(const json& j) {
    expectType(j, "factorization");
    Factorization f;
    std::string kind = expectField(j, "kind").get<std::string>();
    if (kind != "F" && kind != "C") throw ParseError("factorization kind must be \"F\" or \"C\"");
    f.kind = kind == "F" ? Factorization::Kind::FType : Factorization::Kind::CType;
    f.first = chainMapFromJson(expectField(j, "first"));
    f.second = chainMapFromJson(expectField(j, "second"));
    if (f.first.target() != f.second.source())
        throw ParseError("factorization legs do not compose");
    return f;
}

LiftingWitness<ChainInstance> liftingWitnessFromJson(const json& j) {
    expectType(j, "lifting_witness");
    LiftingWitness<ChainInstance> w;
    w.fact = factorizationFromJson(expectField(j, "factorization"));
    w.lift = chainMapFromJson(expectField(j, "lift"));
    return w;
}

DominationWitness<ChainInstance> dominationWitnessFromJson(const json& j) {
    expectType(j, "domination_witness");
    DominationWitness<ChainInstance> w;
    w.source = complexFromJson(expectField(j, "source"));
    w.target = complexFromJson(expectField(j, "target"));
    w.cofibrantSource = complexFromJson(expectField(j, "cofibrant_source"));
    w.fibrantTarget = complexFromJson(expectField(j, "fibrant_target"));
    w.pSource = chainMapFromJson(expectField(j, "p_source"));
    w.iTarget = chainMapFromJson(expectField(j, "i_target"));
    w.alpha = chainMapFromJson(expectField(j, "alpha"));
    w.fact = factorizationFromJson(expectField(j, "factorization"));
    w.lifting = chainMapFromJson(expectField(j, "lifting"));
    return w;
}

CofibreSequenceData<ChainInstance> cofibreSequenceFromJson(const ChainInstance& cat, const json& j) {
    expectType(j, "cofibre_sequence");
    ChainMap f = chainMapFromJson(expectField(j, "f"));
    CofibreSequenceData<ChainInstance> cs = cofibreSequence(cat, f);
    // keep the document's own legs; verification recomputes and compares
    cs.coneIncl = chainMapFromJson(expectField(j, "cone_incl"));
    cs.coneObj = cs.coneIncl.target();
    cs.proj = chainMapFromJson(expectField(j, "proj"));
    cs.fromCone = chainMapFromJson(expectField(j, "from_cone"));
    cs.cofibre = cs.proj.target();
    return cs;
}

IndcatCertificate<ChainInstance> certificateFromJson(const ChainInstance& cat, const json& j) {
    expectType(j, "indcat_certificate");
    IndcatCertificate<ChainInstance> cert;
    cert.subject = complexFromJson(expectField(j, "subject"));
    cert.value = expectInt(expectField(j, "value"), "certificate value");
    std::string kind = expectField(j, "kind").get<std::string>();
    if (kind == "base") {
        cert.base = liftingWitnessFromJson(expectField(j, "witness"));
    } else if (kind == "step") {
        typename IndcatCertificate<ChainInstance>::Step step{
            cofibreSequenceFromJson(cat, expectField(j, "cofibre")),
            dominationWitnessFromJson(expectField(j, "domination")),
            std::make_shared<IndcatCertificate<ChainInstance>>(
                certificateFromJson(cat, expectField(j, "inner")))};
        cert.step = std::move(step);
    } else {
        throw ParseError("certificate kind must be \"base\" or \"step\"");
    }
    return cert;
}

std::string dumpDocument(const json& j) { return j.dump(2) + "\n"; }

json parseDocument(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("document is not valid JSON");
    return j;
}

}  // namespace lscat::io
