#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "klr/identities.hpp"
#include "klr/serialize.hpp"
#include "klr/symfunc.hpp"

namespace {

using namespace klr;

Partition parsePartitionArg(const std::string& s) {
    if (s == "0") return Partition{};
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        parts.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(parts);
}

int cmdLr(const std::string& aArg, const std::string& bArg, const std::string& jsonPath) {
    Partition alpha = parsePartitionArg(aArg), beta = parsePartitionArg(bArg);
    int m = std::max(1, alpha.numParts() + beta.numParts());
    auto expansion = schurExpand(schurBialternant(alpha, m) * schurBialternant(beta, m));
    nlohmann::json out = nlohmann::json::array();
    for (auto& [gamma, c] : expansion) {
        std::cout << gamma.str() << ": " << c.str() << "\n";
        out.push_back({{"gamma", gamma.parts()}, {"coeff", c.str()}});
    }
    if (!jsonPath.empty()) {
        std::ofstream f(jsonPath, std::ios::trunc);
        f << out.dump(2) << "\n";
    }
    return 0;
}

int cmdQbinom(int a, int b) {
    MultiPoly viaFactorials = quantumBinomial(a + b, a);
    MultiPoly viaPartitions = quantumBinomialPartition(a, b);
    std::cout << "factorial form: " << viaFactorials.str() << "\n";
    std::cout << "partition sum:  " << viaPartitions.str() << "\n";
    if (!(viaFactorials == viaPartitions)) {
        std::cerr << "mismatch between the two forms\n";
        return 1;
    }
    return 0;
}

int cmdReduce(const std::string& text) {
    ThinElement e = parseElement(text);
    std::cout << printElement(e) << "\n";
    return 0;
}

int cmdVerify(const RunConfig& cfg) {
    if (!cfg.cachePath.empty()) {
        std::string warn;
        if (!loadThickCache(cfg.cachePath, warn) && !warn.empty())
            std::cerr << "warning: " << warn << "; recomputing\n";
    }
    std::vector<const IdentitySpec*> selected;
    if (cfg.identities.empty()) {
        for (auto& s : identityRegistry()) selected.push_back(&s);
    } else {
        for (auto& name : cfg.identities) {
            const IdentitySpec* s = findIdentity(name);
            if (!s) {
                std::cerr << "unknown identity: " << name << "\n";
                return 2;
            }
            selected.push_back(s);
        }
    }
    nlohmann::json reports = nlohmann::json::array();
    int pass = 0, fail = 0;
    for (const IdentitySpec* s : selected) {
        VerificationReport rep = verifyIdentity(*s, cfg);
        pass += rep.passCount;
        fail += rep.failCount;
        std::cout << s->name << ": " << rep.passCount << "/" << (rep.passCount + rep.failCount)
                  << (rep.allPass() ? " pass" : " FAIL") << "\n";
        reports.push_back(rep.toJson());
    }
    if (!cfg.reportPath.empty()) {
        std::ofstream f(cfg.reportPath, std::ios::trunc);
        f << reports.dump(2) << "\n";
    }
    if (!cfg.cachePath.empty()) saveThickCache(cfg.cachePath);
    std::cout << "total: " << pass << " pass, " << fail << " fail\n";
    return fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for the thick diagrammatic calculus of categorified quantum sl(n)"};
    app.require_subcommand(1);

    std::string lrA, lrB, lrSlash, lrJson;
    auto* lr = app.add_subcommand("lr", "Expand a product of Schur polynomials in the Schur basis");
    lr->add_option("alpha", lrA, "first partition, comma-separated parts (0 for empty)")->required();
    lr->add_option("slash", lrSlash, "separator '/'")->required();
    lr->add_option("beta", lrB, "second partition")->required();
    lr->add_option("--json", lrJson, "also write the expansion as JSON");

    int qa = 0, qb = 0;
    auto* qb_cmd = app.add_subcommand("qbinom", "Quantum binomial in both closed forms");
    qb_cmd->add_option("a", qa)->required();
    qb_cmd->add_option("b", qb)->required();

    std::string reduceText;
    auto* red = app.add_subcommand("reduce", "Reduce a diagram element to canonical form");
    red->add_option("element", reduceText, "element in the psi/x/e grammar")->required();

    klr::RunConfig cfg;
    std::string oracleArg = "off";
    auto* ver = app.add_subcommand("verify", "Verify identity grids and write a JSON report");
    ver->add_option("--rank", cfg.rank, "sl(n) rank")->envname("KLRCALC_RANK");
    ver->add_option("--identity", cfg.identities, "identity name (repeatable)")
        ->envname("KLRCALC_IDENTITY");
    ver->add_option("--max-strands", cfg.maxStrands, "thin strand budget")
        ->envname("KLRCALC_MAX_STRANDS");
    ver->add_option("--oracle", oracleArg, "on/off polynomial oracle cross-check")
        ->envname("KLRCALC_ORACLE");
    ver->add_option("--workers", cfg.workers, "worker threads (0 = hardware)")
        ->envname("KLRCALC_WORKERS");
    ver->add_option("--cache", cfg.cachePath, "splitter cache file")->envname("KLRCALC_CACHE");
    ver->add_option("--report", cfg.reportPath, "report path")->envname("KLRCALC_REPORT");
    ver->add_option("--seed", cfg.seed, "random seed")->envname("KLRCALC_SEED");
    ver->add_flag("--mutate", cfg.mutate, "negative control: corrupt every right side")
        ->envname("KLRCALC_MUTATE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (lr->parsed()) {
            if (lrSlash != "/") {
                std::cerr << "usage: lr <alpha> / <beta>\n";
                return 2;
            }
            return cmdLr(lrA, lrB, lrJson);
        }
        if (qb_cmd->parsed()) return cmdQbinom(qa, qb);
        if (red->parsed()) return cmdReduce(reduceText);
        if (ver->parsed()) {
            if (oracleArg != "on" && oracleArg != "off") {
                std::cerr << "--oracle expects on or off\n";
                return 2;
            }
            cfg.oracle = oracleArg == "on";
            if (cfg.rank < 2 || cfg.maxStrands < 1) {
                std::cerr << "invalid configuration\n";
                return 2;
            }
            return cmdVerify(cfg);
        }
    } catch (const klr::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
