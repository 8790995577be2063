#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgl/reps.hpp"

namespace qgl {

/// Coefficients of g(z,w) = z^3 - sigma1 z^2 w + sigma2 z w^2 - w^3.
struct RelationConstants {
    Scalar sigma1;
    Scalar sigma2;
    Scalar g11;
    /// g[p] is the coefficient of z^{3-p} w^p.
    std::array<Scalar, 4> g;

    static const RelationConstants& get();
};

enum class RelationId { ee, ff, psie, psif, ef, serre_e, serre_f, level, psi_commute };

std::string relation_name(RelationId r);
RelationId relation_from_name(const std::string& s);
const std::vector<RelationId>& all_relations();

struct CheckSpec {
    ModulePtr module;
    std::vector<Label> basis;
    int mode_window = 3;
    int series_order = 6;
    /// Also assert that the two halves of every ee/ff instance mirror each
    /// other under swapping the modes.
    bool antisym = false;

    /// Throws InvalidInput unless series_order >= mode_window + 3.
    void validate() const;
};

enum class CaseStatus { pass, fail, error };

struct CaseResult {
    std::string id;
    CaseStatus status;
    std::string detail;
};

struct Report {
    std::string suite;
    nlohmann::json params = nlohmann::json::object();
    std::vector<CaseResult> cases;
    double seconds = 0;

    int count(CaseStatus s) const;
    bool passed() const { return count(CaseStatus::fail) == 0 && count(CaseStatus::error) == 0; }
    void add(std::string id, bool ok, std::string detail = {});
    void add_error(std::string id, std::string detail);
    void merge(const Report& other);
    nlohmann::json to_json() const;
    std::string summary_line() const;
};

Report check_ee(const CheckSpec& spec);
Report check_ff(const CheckSpec& spec);
Report check_psie(const CheckSpec& spec);
Report check_psif(const CheckSpec& spec);
Report check_ef(const CheckSpec& spec);
Report check_serre(const CheckSpec& spec);
Report check_level_and_central(const CheckSpec& spec);

struct SuiteConfig {
    std::string name;
    CheckSpec spec;
    std::vector<RelationId> relations = all_relations();
    /// Prescreen every case modulo a prime at a seeded random point; only
    /// failures are re-run with exact coefficients.
    bool numeric = false;
    std::uint64_t seed = 1;
    nlohmann::json params = nlohmann::json::object();
    /// 0 picks the hardware concurrency.
    unsigned workers = 0;
};

Report run_suite(const SuiteConfig& config);

}  // namespace qgl
