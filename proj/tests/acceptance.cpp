// Acceptance suite: one line per criterion, nonzero exit if any fails.
// argv[1] must point at the lscat CLI binary (used by the determinism
// criterion).

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lscat/io.hpp"
#include "lscat/map_solver.hpp"
#include "lscat/sampler.hpp"

using namespace lscat;
namespace fs = std::filesystem;

namespace {

const ChainInstance cat;
const ChainSampler sampler;  // support [-3, 5], per-degree dim <= 3
int maxAbsDegreeSeen = 0;

void track(const Complex& x) {
    if (x.dims().entries.empty()) return;
    maxAbsDegreeSeen = std::max({maxAbsDegreeSeen, std::abs(x.minDegree()), std::abs(x.maxDegree())});
}

struct CliRun {
    int exitCode;
    std::string out;
};

std::string g_cliPath;

CliRun runCli(const std::string& args) {
    std::string cmd = g_cliPath + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string writeDoc(const fs::path& dir, const std::string& name, const nlohmann::json& doc) {
    fs::path p = dir / name;
    std::ofstream f(p, std::ios::binary);
    f << io::dumpDocument(doc);
    return p.string();
}

// ---------------------------------------------------------------------------

// 1. indcat X = cat X on seeded random complexes, certificates verified
//    independently of catOf.
bool criterionIndcatEqualsCat(std::string& detail) {
    Rng rng(20240001);
    for (int i = 0; i < 200; ++i) {
        Complex x = (i % 11 == 0) ? sampler.randomAcyclicComplex(rng) : sampler.randomComplex(rng);
        track(x);
        CatResult<ChainInstance> c = catOf(cat, x, 4);
        if (!c.value) {
            detail = "catOf exceeded maxN on sample " + std::to_string(i);
            return false;
        }
        IndcatCertificate<ChainInstance> cert = canonicalCertificate(cat, x, 4);
        if (!verifyCertificate(cat, cert, x)) {
            detail = "certificate failed independent verification on sample " + std::to_string(i);
            return false;
        }
        if (cert.value != *c.value) {
            detail = "indcat " + std::to_string(cert.value) + " != cat " + std::to_string(*c.value) +
                     " on sample " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// 2. Constructive direction: verified certificates (canonical and
//    adversarial non-canonical) drive synthesizeSection to strict sections,
//    and cat of the subject is bounded by the certificate value.
bool criterionConstructiveDirection(std::string& detail) {
    Rng rng(20240002);
    int built = 0;
    auto exercise = [&](const IndcatCertificate<ChainInstance>& cert) -> bool {
        if (!verifyCertificate(cat, cert, cert.subject)) {
            detail = "input certificate failed verification";
            return false;
        }
        SynthesisChain<ChainInstance> chain = synthesizeFromCertificate(cat, cert);
        if (static_cast<int>(chain.steps.size()) != cert.value) {
            detail = "synthesis chain has wrong length";
            return false;
        }
        for (const auto& step : chain.steps) {
            if (compose(step.pnC, step.sigma) != ChainMap::identity(step.input.cofibre)) {
                detail = "synthesized sigma is not a strict section";
                return false;
            }
            track(step.constructedGanea);
        }
        CatResult<ChainInstance> c = catOf(cat, cert.subject, 4);
        if (!c.value || *c.value > cert.value) {
            detail = "catOf exceeds the certificate value";
            return false;
        }
        ++built;
        return true;
    };

    // canonical certificates over sampled complexes
    for (int i = 0; i < 13; ++i) {
        Complex x = (i % 5 == 0) ? sampler.randomAcyclicComplex(rng) : sampler.randomComplex(rng);
        track(x);
        if (!exercise(canonicalCertificate(cat, x, 4))) {
            detail += " (canonical sample " + std::to_string(i) + ")";
            return false;
        }
    }
    // adversarial non-canonical certificates: user-chosen cofibre sequences
    // with acyclic middles, subjects dominated by the cofibre
    for (int i = 0; built < 26 && i < 40; ++i) {
        Complex a = sampler.randomComplex(rng);
        if (a.isZeroObject()) continue;
        ChainMap f = cofibreSequence(cat, ChainMap::zero(a, Complex::zero())).coneIncl;
        CofibreSequenceData<ChainInstance> cs = cofibreSequence(cat, f);
        Complex subject = (i % 2 == 0) ? cs.cofibre : Complex::create(homologyDims(cs.cofibre), {});
        if (homologyDims(subject).entries.empty()) continue;
        auto dom = dominates(cat, cs.cofibre, subject);
        auto baseWitness = weakSection(cat, ChainMap::zero(Complex::zero(), f.target()));
        if (!dom || !baseWitness) {
            detail = "adversarial construction could not assemble its witnesses";
            return false;
        }
        IndcatCertificate<ChainInstance> inner;
        inner.subject = f.target();
        inner.value = 0;
        inner.base = *baseWitness;
        IndcatCertificate<ChainInstance> cert;
        cert.subject = subject;
        cert.value = 1;
        cert.step = IndcatCertificate<ChainInstance>::Step{
            cs, *dom, std::make_shared<IndcatCertificate<ChainInstance>>(std::move(inner))};
        if (!exercise(cert)) {
            detail += " (adversarial sample " + std::to_string(i) + ")";
            return false;
        }
    }
    if (built < 26) {
        detail = "only assembled " + std::to_string(built) + " certificates";
        return false;
    }
    return true;
}

// 3. The domination relation obeys its structural laws.
bool criterionDominationSuite(std::string& detail) {
    Rng rng(20240003);
    const ChainSampler thin{ChainSamplerConfig{-2, 3, 1}};
    for (int i = 0; i < 200; ++i) {
        Complex x = sampler.randomComplex(rng);
        track(x);
        // (i) reflexivity
        if (!dominates(cat, x, x)) {
            detail = "(i) reflexivity failed on sample " + std::to_string(i);
            return false;
        }
        // (ii) invariance under acyclic thickening
        Complex thick = directSum(x, thin.randomAcyclicComplex(rng));
        Complex z = thin.randomComplex(rng);
        if (dominates(cat, x, z).has_value() != dominates(cat, thick, z).has_value()) {
            detail = "(ii) weq-invariance failed on sample " + std::to_string(i);
            return false;
        }
        // (iii) weak sections convert to verifying witnesses
        ChainMap g = sampler.randomMapInto(rng, x);
        auto ws = weakSection(cat, g);
        if (ws) {
            DominationWitness<ChainInstance> w = dominationFromWeakSection(cat, g, *ws);
            bool ok = compose(w.fact.second, w.fact.first) == w.alpha &&
                      compose(w.fact.second, w.lifting) == w.iTarget && cat.isWeq(w.fact.first) &&
                      cat.isFibration(w.fact.second);
            if (!ok) {
                detail = "(iii) converted witness failed its equations on sample " + std::to_string(i);
                return false;
            }
        }
        // (iv) domination bounds cat
        Complex y = thin.randomComplex(rng);
        if (dominates(cat, x, y)) {
            auto cx = catOf(cat, x, 4), cy = catOf(cat, y, 4);
            if (!cx.value || !cy.value || *cy.value > *cx.value) {
                detail = "(iv) cat monotonicity failed on sample " + std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

// 4. The diagrammatic decisions agree with the homology oracles.
bool criterionOracleEquivalence(std::string& detail) {
    Rng rng(20240004);
    for (int i = 0; i < 200; ++i) {
        Complex b = sampler.randomComplex(rng);
        track(b);
        ChainMap g = sampler.randomMapInto(rng, b);
        if (weakSection(cat, g).has_value() != cat.weakSectionOracle(g)) {
            detail = "weakSection disagreed with its oracle on sample " + std::to_string(i);
            return false;
        }
        Complex x = sampler.randomComplex(rng);
        Complex y = sampler.randomComplex(rng);
        if (dominates(cat, x, y).has_value() != cat.dominationOracle(x, y)) {
            detail = "dominates disagreed with its oracle on sample " + std::to_string(i);
            return false;
        }
        CatResult<ChainInstance> c = catOf(cat, x, 4);
        if (!c.value || *c.value != cat.catOracle(x)) {
            detail = "catOf disagreed with the closed form on sample " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// 5. Join: symmetric and independent of the F-factorization strategy at the
//    level of graded homology.
bool criterionJoinProperties(std::string& detail) {
    ChainInstanceConfig alt;
    alt.fFactStrategy = ChainInstanceConfig::FFactStrategy::CylinderDetour;
    ChainInstance detour(alt);
    Rng rng(20240005);
    for (int i = 0; i < 100; ++i) {
        Complex b = sampler.randomComplex(rng);
        ChainMap f = sampler.randomMapInto(rng, b);
        ChainMap g = sampler.randomMapInto(rng, b);
        GradedDims h = homologyDims(join(cat, f, g).po.obj);
        if (h != homologyDims(join(cat, g, f).po.obj)) {
            detail = "join symmetry failed on sample " + std::to_string(i);
            return false;
        }
        if (h != homologyDims(join(detour, f, g).po.obj)) {
            detail = "join strategy-independence failed on sample " + std::to_string(i);
            return false;
        }
        // weak-lifting verdicts are also strategy-independent
        ChainMap probe = sampler.randomMapInto(rng, b);
        if (weakLifting(cat, probe, g).has_value() != weakLifting(detour, probe, g).has_value()) {
            detail = "weak-lifting strategy-independence failed on sample " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// 6. Ganea functoriality: the commutation identity holds entry-exactly.
bool criterionGaneaFunctoriality(std::string& detail) {
    Rng rng(20240006);
    const ChainSampler small{ChainSamplerConfig{-2, 3, 2}};
    for (int i = 0; i < 50; ++i) {
        Complex x = small.randomComplex(rng);
        Complex y = small.randomComplex(rng);
        ChainMap phi = small.randomChainMap(rng, x, y);
        GaneaTower<ChainInstance> tx = ganeaTower(cat, x, 2);
        GaneaTower<ChainInstance> ty = ganeaTower(cat, y, 2);
        track(tx.levels[2].obj);
        try {
            auto maps = ganeaMaps(cat, tx, ty, phi, 2);  // commutation checked inside, exactly
            for (int k = 0; k <= 2; ++k)
                if (compose(ty.levels[k].map, maps[k]) != compose(phi, tx.levels[k].map))
                    throw std::logic_error("commutation re-check failed");
        } catch (const std::exception& e) {
            detail = std::string(e.what()) + " on sample " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// 7. The chain instance passes the sampled axiom audit; corrupted fixtures
//    are detected.
struct CorruptedFibrations : ChainInstance {
    bool isFibration(const ChainMap& m) const {
        return ChainInstance().isFibration(m) && m.source().totalDim() < 9;
    }
};
struct CorruptedWeqs : ChainInstance {
    bool isWeq(const ChainMap& m) const {
        return ChainInstance().isWeq(m) && m.source().totalDim() < 7;
    }
};

bool criterionAxiomAudit(std::string& detail) {
    for (std::uint64_t seed : {std::uint64_t(1), std::uint64_t(20240807)}) {
        AxiomReport j1 = checkJ1(cat, sampler, 200, seed);
        AxiomReport j2 = checkJ2(cat, sampler, 200, seed);
        AxiomReport m = checkM1M2(cat, sampler, 200, seed);
        for (const AxiomReport* rep : {&j1, &j2, &m}) {
            if (!rep->pass()) {
                detail = rep->axiom + " failed: " + rep->failures.front().what + " (seed " +
                         std::to_string(rep->failures.front().seed) + ")";
                return false;
            }
        }
    }
    const ChainSampler small{ChainSamplerConfig{-2, 3, 2}};
    CorruptedFibrations badFib;
    if (checkJ2(badFib, small, 60, 7).pass() && checkJ1(badFib, small, 60, 7).pass() &&
        checkM1M2(badFib, small, 60, 7).pass()) {
        detail = "corrupted fibration predicate went undetected";
        return false;
    }
    CorruptedWeqs badWeq;
    if (checkJ1(badWeq, small, 60, 7).pass() && checkJ2(badWeq, small, 60, 7).pass() &&
        checkM1M2(badWeq, small, 60, 7).pass()) {
        detail = "corrupted weq predicate went undetected";
        return false;
    }
    return true;
}

// 8. Duality: cocat agrees with indcocat; spheres have cocat 1.
bool criterionDuality(std::string& detail) {
    for (int n = -2; n <= 3; ++n) {
        auto c = cocatOf(cat, Complex::sphere(n), 4);
        if (!c.value || *c.value != 1) {
            detail = "cocat(S(" + std::to_string(n) + ")) != 1";
            return false;
        }
    }
    Rng rng(20240008);
    for (int i = 0; i < 100; ++i) {
        Complex x = sampler.randomComplex(rng);
        track(x);
        auto c = cocatOf(cat, x, 4);
        auto ind = indcocatOf(cat, x, 4);
        if (!c.value || *c.value != ind.value) {
            detail = "cocat != indcocat on sample " + std::to_string(i);
            return false;
        }
        if (!verifyCertificate(cat, ind.certificate, cat.dualizeObject(x))) {
            detail = "indcocat certificate failed verification on sample " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// 9. CLI determinism and document round-trips.
bool criterionDeterminism(std::string& detail) {
    fs::path dir = fs::temp_directory_path() / ("lscat_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    Rng rng(20240009);
    Complex x = sampler.randomComplex(rng);
    while (homologyDims(x).entries.empty()) x = sampler.randomComplex(rng);
    std::string xPath = writeDoc(dir, "x.json", io::toJson(x));
    std::string yPath = writeDoc(dir, "y.json", io::toJson(directSum(x, Complex::disc(1))));

    std::string certPath = (dir / "cert.json").string();
    std::array<std::string, 5> commands = {
        "cat " + xPath,
        "indcat " + xPath + " --emit-cert " + certPath,
        "ganea " + xPath + " -n 1",
        "weq " + xPath + " " + yPath,
        "check-axioms --samples 20 --seed 3",
    };
    std::string firstCert;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        CliRun a = runCli(commands[i]);
        if (i == 1) {
            std::ifstream c1(certPath);
            std::stringstream s1;
            s1 << c1.rdbuf();
            firstCert = s1.str();
        }
        CliRun b = runCli(commands[i]);
        if (a.exitCode != 0 || b.exitCode != 0) {
            detail = "command '" + commands[i] + "' exited " + std::to_string(a.exitCode);
            return false;
        }
        if (a.out != b.out) {
            detail = "command '" + commands[i] + "' produced different bytes across runs";
            return false;
        }
    }
    std::ifstream c2(certPath);
    std::stringstream s2;
    s2 << c2.rdbuf();
    if (firstCert.empty() || s2.str() != firstCert) {
        detail = "emitted certificates differ across identical runs";
        return false;
    }
    // emitted documents re-parse to entry-exact values
    IndcatCertificate<ChainInstance> cert =
        io::certificateFromJson(cat, io::parseDocument(firstCert));
    if (!verifyCertificate(cat, cert, x)) {
        detail = "re-parsed certificate failed verification";
        return false;
    }
    CliRun dual = runCli("dualize " + xPath);
    if (dual.exitCode != 0 || io::complexFromJson(io::parseDocument(dual.out)) != dualize(x)) {
        detail = "dualize document did not re-parse to the in-memory value";
        return false;
    }
    // exit-code contract: malformed document gives 2, negative verdict 1
    std::string badPath = writeDoc(dir, "bad.json", io::parseDocument(R"({"type":"complex",
        "dims":{"0":1,"1":1,"2":1},"d":{"1":[["1"]],"2":[["1"]]}})"));
    if (runCli("cat " + badPath).exitCode != 2) {
        detail = "malformed document did not exit with code 2";
        return false;
    }
    std::string s2Path = writeDoc(dir, "s2.json", io::toJson(Complex::sphere(2)));
    std::string s3Path = writeDoc(dir, "s3.json", io::toJson(Complex::sphere(3)));
    if (runCli("dominates " + s2Path + " " + s3Path).exitCode != 1) {
        detail = "negative verdict did not exit with code 1";
        return false;
    }
    fs::remove_all(dir);
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-lscat-cli>\n";
        return 2;
    }
    g_cliPath = argv[1];

    struct Entry {
        const char* label;
        bool (*run)(std::string&);
    };
    const Entry entries[] = {
        {"indcat = cat with independently verified certificates (200 samples)",
         criterionIndcatEqualsCat},
        {"constructive direction: synthesized strict sections from 26 certificates",
         criterionConstructiveDirection},
        {"domination suite: reflexivity, weq-invariance, section conversion, cat bound (200 samples)",
         criterionDominationSuite},
        {"oracle equivalence: weak sections, domination, cat closed form (200 samples)",
         criterionOracleEquivalence},
        {"join symmetry and factorization-strategy independence (100 pairs)",
         criterionJoinProperties},
        {"Ganea functoriality: exact commutation for 50 sampled maps up to level 2",
         criterionGaneaFunctoriality},
        {"axiom audit: J1/J2/M1M2 pass at 200 samples, corrupted fixtures detected",
         criterionAxiomAudit},
        {"duality: cocat = indcocat (100 samples), cocat of spheres is 1", criterionDuality},
        {"determinism and round-trip: byte-identical CLI reruns, documents re-parse exactly",
         criterionDeterminism},
    };

    auto suiteStart = std::chrono::steady_clock::now();
    bool allPass = true;
    int id = 1;
    for (const Entry& e : entries) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = e.run(detail);
        } catch (const std::exception& ex) {
            detail = std::string("exception: ") + ex.what();
        }
        auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                .count();
        std::printf("criterion %d: %s - %s (%lld ms)%s%s\n", id, ok ? "PASS" : "FAIL", e.label,
                    static_cast<long long>(ms), detail.empty() ? "" : " :: ", detail.c_str());
        allPass = allPass && ok;
        ++id;
    }

    // 10. wall clock and support guard
    auto totalS =
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - suiteStart)
            .count();
    bool timeOk = totalS < 270 && maxAbsDegreeSeen <= 32;
    std::printf("criterion 10: %s - wall clock %llds (< 270s) and max |degree| %d (<= 32)\n",
                timeOk ? "PASS" : "FAIL", static_cast<long long>(totalS), maxAbsDegreeSeen);
    allPass = allPass && timeOk;

    return allPass ? 0 : 1;
}
