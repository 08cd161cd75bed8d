#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bhc {

using Json = nlohmann::ordered_json;

/// Outcome of a single named check inside a verification suite.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::optional<std::uint64_t> first_violation; // index n of the first failure
    std::string detail;
};

/// One row of a per-n experiment summary.
struct PerNStat {
    std::uint64_t n = 0;
    double stat_max = 0.0;
    double stat_mean = 0.0;
    double stat_min = 0.0;
    std::uint64_t trials = 0;
    Json witness; // instance attaining stat_max
};

/// Structured result of a verification suite or a randomized experiment.
struct ExperimentReport {
    std::string experiment;
    Json params = Json::object();
    std::optional<std::uint64_t> seed;
    std::vector<CheckResult> checks;
    std::vector<PerNStat> per_n;
    Json details = Json::object();

    bool passed() const;
    std::string verdict() const { return passed() ? "pass" : "fail"; }

    /// Append a check; returns its pass flag.
    bool add_check(std::string name, bool passed, std::optional<std::uint64_t> first_violation = std::nullopt,
                   std::string detail = {});

    const CheckResult* find_check(const std::string& name) const;

    /// Concatenates checks and per-n rows of another shard of the same experiment.
    void merge(const ExperimentReport& other);

    Json to_json() const;
};

} // namespace bhc
