#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lscat/io.hpp"
#include "lscat/sampler.hpp"

// lscat: Lusternik-Schnirelmann category computations on finitely supported
// rational chain complexes. Exit codes: 0 success / positive verdict,
// 1 negative verdict, 2 input error, 3 resource guard.

namespace {

using namespace lscat;
using nlohmann::json;

constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Complex loadComplex(const std::string& path) {
    Complex x = io::complexFromJson(io::parseDocument(readFile(path)));
    ValidationReport rep = validate(x);
    if (!rep.ok) throw ParseError(path + ": " + rep.what);
    return x;
}

ChainMap loadChainMap(const std::string& path) {
    ChainMap f = io::chainMapFromJson(io::parseDocument(readFile(path)));
    for (const Complex* c : {&f.source(), &f.target()}) {
        ValidationReport rep = validate(*c);
        if (!rep.ok) throw ParseError(path + ": " + rep.what);
    }
    ValidationReport rep = validate(f);
    if (!rep.ok) throw ParseError(path + ": " + rep.what);
    return f;
}

void emitDocument(const json& doc, const std::string& outPath) {
    std::string text = io::dumpDocument(doc);
    if (outPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(outPath, std::ios::binary);
        if (!out) throw ParseError("cannot write '" + outPath + "'");
        out << text;
    }
}

std::string homologySummary(const Complex& x) {
    return "dims " + x.dims().str() + ", homology " + homologyDims(x).str();
}

struct Options {
    int maxN = 4;
    std::uint64_t seed = 0;
    int samples = 200;
    int supportGuard = 32;

    ChainInstance instance() const {
        ChainInstanceConfig cfg;
        cfg.supportGuard = supportGuard;
        return ChainInstance(cfg);
    }
};

int runCat(const Options& opt, const std::string& file, bool dual) {
    ChainInstance cat = opt.instance();
    Complex x = loadComplex(file);
    if (dual) x = cat.dualizeObject(x);
    CatResult<ChainInstance> res = catOf(cat, x, opt.maxN);
    const char* name = dual ? "cocat" : "cat";
    if (!res.value) {
        std::cout << name << " > " << opt.maxN << " (exceeded --max-n)\n";
        return kExitResource;
    }
    std::cout << name << " = " << *res.value << "\n";
    std::cout << "weak section found at Ganea level " << *res.value << " (middle dims "
              << res.witness->fact.middle().dims().str() << ")\n";
    return 0;
}

int runIndcat(const Options& opt, const std::string& file, const std::string& emitCert, bool dual) {
    ChainInstance cat = opt.instance();
    Complex x = loadComplex(file);
    if (dual) x = cat.dualizeObject(x);
    IndcatResult<ChainInstance> res = indcatOf(cat, x, opt.maxN);
    std::cout << (dual ? "indcocat" : "indcat") << " = " << res.value << "\n";
    std::cout << "certificate verified independently ("
              << (res.certificate.base ? "base witness" : "cofibre step chain") << ")\n";
    if (!emitCert.empty()) {
        emitDocument(io::toJson(res.certificate), emitCert);
        std::cout << "certificate written to " << emitCert << "\n";
    }
    return 0;
}

int runVerifyCert(const Options& opt, const std::string& certFile, const std::string& targetFile) {
    ChainInstance cat = opt.instance();
    IndcatCertificate<ChainInstance> cert =
        io::certificateFromJson(cat, io::parseDocument(readFile(certFile)));
    Complex target = loadComplex(targetFile);
    CertificateCheck check = verifyCertificateDetailed(cat, cert, target);
    if (check.ok) {
        std::cout << "certificate: valid (indcat <= " << cert.value << ")\n";
        return 0;
    }
    std::cout << "certificate: INVALID - " << check.reason << "\n";
    return kExitNegative;
}

int runJoin(const Options& opt, const std::string& fFile, const std::string& gFile,
            const std::string& out) {
    ChainInstance cat = opt.instance();
    ChainMap f = loadChainMap(fFile);
    ChainMap g = loadChainMap(gFile);
    JoinDiagram<ChainInstance> jd = join(cat, f, g);
    std::cout << "join object: " << homologySummary(jd.po.obj) << "\n";
    json doc;
    doc["type"] = "join_result";
    doc["object"] = io::toJson(jd.po.obj);
    doc["join_map"] = io::toJson(jd.joinMap);
    emitDocument(doc, out);
    return 0;
}

int runGanea(const Options& opt, const std::string& file, int levels, const std::string& out) {
    ChainInstance cat = opt.instance();
    Complex x = loadComplex(file);
    GaneaTower<ChainInstance> tower = ganeaTower(cat, x, levels);
    json levelDocs = json::array();
    for (int k = 0; k <= levels; ++k) {
        bool hasSection = weakSection(cat, tower.levels[k].map).has_value();
        std::cout << "G_" << k << ": " << homologySummary(tower.levels[k].obj)
                  << (hasSection ? "  [weak section found]" : "") << "\n";
        json level;
        level["object"] = io::toJson(tower.levels[k].obj);
        level["map"] = io::toJson(tower.levels[k].map);
        level["homology"] = io::toJson(homologyDims(tower.levels[k].obj));
        level["weak_section"] = hasSection;
        levelDocs.push_back(std::move(level));
    }
    json doc;
    doc["type"] = "ganea_tower";
    doc["base"] = io::toJson(x);
    doc["levels"] = std::move(levelDocs);
    emitDocument(doc, out);
    return 0;
}

int runDominates(const Options& opt, const std::string& xFile, const std::string& yFile,
                 const std::string& out) {
    ChainInstance cat = opt.instance();
    Complex x = loadComplex(xFile);
    Complex y = loadComplex(yFile);
    auto witness = dominates(cat, x, y);
    if (!witness) {
        std::cout << "dominates: no\n";
        return kExitNegative;
    }
    std::cout << "dominates: yes\n";
    emitDocument(io::toJson(*witness), out);
    return 0;
}

int runWeq(const Options& opt, const std::string& xFile, const std::string& yFile,
           const std::string& out) {
    (void)opt;
    Complex x = loadComplex(xFile);
    Complex y = loadComplex(yFile);
    auto legs = areWeaklyEquivalent(x, y);
    if (!legs) {
        std::cout << "weakly equivalent: no\n";
        return kExitNegative;
    }
    std::cout << "weakly equivalent: yes (zigzag with " << legs->size() << " legs)\n";
    emitDocument(io::zigzagToJson(*legs), out);
    return 0;
}

int runDualize(const Options& opt, const std::string& file, const std::string& out) {
    (void)opt;
    Complex x = loadComplex(file);
    emitDocument(io::toJson(dualize(x)), out);
    return 0;
}

int runCheckAxioms(const Options& opt, const std::string& out) {
    ChainInstance cat = opt.instance();
    ChainSampler sampler;
    json reports = json::array();
    bool allPass = true;
    AxiomReport j1 = checkJ1(cat, sampler, opt.samples, opt.seed);
    AxiomReport j2 = checkJ2(cat, sampler, opt.samples, opt.seed);
    AxiomReport m = checkM1M2(cat, sampler, opt.samples, opt.seed);
    for (const AxiomReport* rep : {&j1, &j2, &m}) {
        if (rep->pass()) {
            std::cout << rep->axiom << ": pass (" << rep->samples << " samples, seed " << rep->seed
                      << ")\n";
        } else {
            allPass = false;
            std::cout << rep->axiom << ": FAIL - " << rep->failures.front().what << " (replay seed "
                      << rep->failures.front().seed << ")\n";
        }
        reports.push_back(io::toJson(*rep));
    }
    if (!out.empty()) emitDocument(reports, out);
    return allPass ? 0 : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LS-category engine for rational chain complexes"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--max-n", opt.maxN, "Ganea tower search ceiling")->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for sampled audits")->capture_default_str();
    app.add_option("--samples", opt.samples, "sample count for audits")->capture_default_str();
    app.add_option("--support-guard", opt.supportGuard, "maximum absolute degree")
        ->capture_default_str();

    std::string fileA, fileB, out;
    int levels = 2;

    auto* cmdCat = app.add_subcommand("cat", "LS-category of a complex");
    cmdCat->add_option("file", fileA)->required();

    auto* cmdIndcat = app.add_subcommand("indcat", "inductive category with certificate");
    cmdIndcat->add_option("file", fileA)->required();
    cmdIndcat->add_option("--emit-cert", out, "write the certificate document here");

    auto* cmdCocat = app.add_subcommand("cocat", "cocategory (dual complex)");
    cmdCocat->add_option("file", fileA)->required();

    auto* cmdIndcocat = app.add_subcommand("indcocat", "inductive cocategory with certificate");
    cmdIndcocat->add_option("file", fileA)->required();
    cmdIndcocat->add_option("--emit-cert", out, "write the certificate document here");

    auto* cmdVerify = app.add_subcommand("verify-cert", "verify a certificate against a complex");
    cmdVerify->add_option("certificate", fileA)->required();
    cmdVerify->add_option("target", fileB)->required();

    auto* cmdJoin = app.add_subcommand("join", "join of two maps with common target");
    cmdJoin->add_option("f", fileA)->required();
    cmdJoin->add_option("g", fileB)->required();
    cmdJoin->add_option("--out", out, "write the result document here");

    auto* cmdGanea = app.add_subcommand("ganea", "Ganea tower with weak-section markers");
    cmdGanea->add_option("file", fileA)->required();
    cmdGanea->add_option("-n,--levels", levels, "top tower level")->capture_default_str();
    cmdGanea->add_option("--out", out, "write the tower document here");

    auto* cmdDominates = app.add_subcommand("dominates", "does X dominate Y?");
    cmdDominates->add_option("x", fileA)->required();
    cmdDominates->add_option("y", fileB)->required();
    cmdDominates->add_option("--out", out, "write the witness document here");

    auto* cmdWeq = app.add_subcommand("weq", "weak equivalence test with explicit zigzag");
    cmdWeq->add_option("x", fileA)->required();
    cmdWeq->add_option("y", fileB)->required();
    cmdWeq->add_option("--out", out, "write the zigzag document here");

    auto* cmdDualize = app.add_subcommand("dualize", "linear dual of a complex");
    cmdDualize->add_option("file", fileA)->required();
    cmdDualize->add_option("--out", out, "write the dual complex here");

    auto* cmdAxioms = app.add_subcommand("check-axioms", "sampled audit of the category axioms");
    cmdAxioms->add_option("--out", out, "write the report documents here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmdCat->parsed()) return runCat(opt, fileA, false);
        if (cmdIndcat->parsed()) return runIndcat(opt, fileA, out, false);
        if (cmdCocat->parsed()) return runCat(opt, fileA, true);
        if (cmdIndcocat->parsed()) return runIndcat(opt, fileA, out, true);
        if (cmdVerify->parsed()) return runVerifyCert(opt, fileA, fileB);
        if (cmdJoin->parsed()) return runJoin(opt, fileA, fileB, out);
        if (cmdGanea->parsed()) return runGanea(opt, fileA, levels, out);
        if (cmdDominates->parsed()) return runDominates(opt, fileA, fileB, out);
        if (cmdWeq->parsed()) return runWeq(opt, fileA, fileB, out);
        if (cmdDualize->parsed()) return runDualize(opt, fileA, out);
        if (cmdAxioms->parsed()) return runCheckAxioms(opt, out);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitResource;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
