#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "klr/thick.hpp"

namespace klr {

struct RunConfig {
    int rank = 4;
    int maxStrands = 6;
    std::vector<std::string> identities;  // empty selects all
    bool oracle = false;
    int workers = 0;  // 0 picks the hardware count
    std::string cachePath;
    std::string reportPath = "report.json";
    uint64_t seed = 12345;
    bool mutate = false;
};

/// Both sides of one identity instance as thick-diagram linear combinations.
struct SidePair {
    std::vector<std::pair<Int, ThickDiagram>> lhs, rhs;
};

struct IdentitySpec {
    // Equality checks reduce(LHS) == reduce(RHS); RouteAgreement instead checks
    // that the reduction verdict matches the polynomial-oracle verdict.
    enum Mode { Equality, RouteAgreement };
    std::string name;
    Mode mode = Equality;
    std::function<std::vector<nlohmann::json>(const RunConfig&)> grid;
    std::function<SidePair(const nlohmann::json&)> build;
};

struct TupleResult {
    nlohmann::json params;
    bool pass = false;
    int lhsTerms = 0, rhsTerms = 0;
    std::string diff;
    long millis = 0;
};

struct VerificationReport {
    std::string identity;
    std::vector<TupleResult> grid;
    int passCount = 0, failCount = 0;
    nlohmann::json toJson() const;
    bool allPass() const { return failCount == 0; }
};

const std::vector<IdentitySpec>& identityRegistry();
const IdentitySpec* findIdentity(const std::string& name);

/// Run one identity over its grid. Tuples are checked by reduced-form equality
/// and, when enabled, cross-checked by the polynomial oracle. With
/// config.mutate the right side is corrupted and failures are expected.
VerificationReport verifyIdentity(const IdentitySpec& spec, const RunConfig& config);

nlohmann::json engineConfigJson();

}  // namespace klr
