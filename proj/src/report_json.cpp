#include <mexlab/report_json.hpp>

#include <stdexcept>

namespace mexlab
{

nlohmann::json to_json(const VerifyReport &r)
{
    nlohmann::json j;
    j["check_name"] = r.check_name;
    j["status"] = r.passed() ? "PASS" : "FAIL";
    j["range_checked"] = r.range_checked;
    if (r.first_failure) {
        nlohmann::json f{{"n", r.first_failure->n}, {"expected", r.first_failure->expected}, {"actual", r.first_failure->actual}};
        if (r.first_failure->m) {
            f["m"] = *r.first_failure->m;
        }
        j["first_failure"] = std::move(f);
    }
    j["metrics"] = nlohmann::json::object();
    for (const auto &[k, v] : r.metrics) {
        j["metrics"][k] = v;
    }
    if (!r.notes.empty()) {
        j["notes"] = r.notes;
    }
    return j;
}

VerifyReport report_from_json(const nlohmann::json &j)
{
    VerifyReport r;
    r.check_name = j.at("check_name").get<std::string>();
    const auto status = j.at("status").get<std::string>();
    if (status != "PASS" && status != "FAIL") {
        throw std::invalid_argument("report status must be PASS or FAIL, got " + status);
    }
    r.status = status == "PASS" ? Status::Pass : Status::Fail;
    r.range_checked = j.at("range_checked").get<std::string>();
    if (j.contains("first_failure")) {
        const auto &f = j["first_failure"];
        Witness w;
        w.n = f.at("n").get<std::int64_t>();
        if (f.contains("m")) {
            w.m = f["m"].get<std::int64_t>();
        }
        w.expected = f.at("expected").get<std::string>();
        w.actual = f.at("actual").get<std::string>();
        r.first_failure = std::move(w);
    }
    for (const auto &[k, v] : j.at("metrics").items()) {
        r.metrics[k] = v.get<double>();
    }
    if (j.contains("notes")) {
        r.notes = j["notes"].get<std::map<std::string, std::string>>();
    }
    return r;
}

nlohmann::json to_json(const Overpartition &pi)
{
    nlohmann::json groups = nlohmann::json::array();
    for (const auto &g : pi.groups()) {
        groups.push_back({{"part", g.part}, {"count", g.count}, {"overlined", g.overlined}});
    }
    return {{"text", pi.to_string()}, {"groups", std::move(groups)}};
}

nlohmann::json to_json(const AsymRow &row)
{
    return {{"n", row.n}, {"exact", row.exact.get_str()}, {"predicted", row.predicted}, {"ratio", row.ratio}};
}

} // namespace mexlab
