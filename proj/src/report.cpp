#include "bhc/report.hpp"

#include <algorithm>

namespace bhc {

bool ExperimentReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool ExperimentReport::add_check(std::string name, bool ok, std::optional<std::uint64_t> first_violation,
                                 std::string detail)
{
    checks.push_back({std::move(name), ok, first_violation, std::move(detail)});
    return ok;
}

const CheckResult* ExperimentReport::find_check(const std::string& name) const
{
    auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

void ExperimentReport::merge(const ExperimentReport& other)
{
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    per_n.insert(per_n.end(), other.per_n.begin(), other.per_n.end());
    std::stable_sort(per_n.begin(), per_n.end(), [](const PerNStat& a, const PerNStat& b) { return a.n < b.n; });
    for (const auto& [key, value] : other.details.items())
        details[key] = value;
}

Json ExperimentReport::to_json() const
{
    Json out;
    out["experiment"] = experiment;
    out["params"] = params;
    out["seed"] = seed ? Json(*seed) : Json(nullptr);
    Json rows = Json::array();
    for (const auto& row : per_n) {
        Json r;
        r["n"] = row.n;
        r["stat_max"] = row.stat_max;
        r["stat_mean"] = row.stat_mean;
        r["stat_min"] = row.stat_min;
        r["trials"] = row.trials;
        r["witness"] = row.witness;
        rows.push_back(std::move(r));
    }
    out["per_n"] = std::move(rows);
    Json cs = Json::array();
    for (const auto& c : checks) {
        Json j;
        j["name"] = c.name;
        j["passed"] = c.passed;
        j["first_violation"] = c.first_violation ? Json(*c.first_violation) : Json(nullptr);
        if (!c.detail.empty())
            j["detail"] = c.detail;
        cs.push_back(std::move(j));
    }
    out["checks"] = std::move(cs);
    out["details"] = details;
    out["verdict"] = verdict();
    return out;
}

} // namespace bhc
