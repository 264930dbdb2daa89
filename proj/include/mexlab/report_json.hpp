#ifndef MEXLAB_REPORT_JSON_HPP
#define MEXLAB_REPORT_JSON_HPP

#include <json.hpp>

#include <mexlab/combinat.hpp>
#include <mexlab/verify.hpp>

namespace mexlab
{

// {"check_name", "status": "PASS"|"FAIL", "range_checked", "first_failure"?, "metrics": {}}
// plus "notes" when any were recorded.
nlohmann::json to_json(const VerifyReport &report);
VerifyReport report_from_json(const nlohmann::json &j);

// {"text": "3~+1", "groups": [{"part", "count", "overlined"}...]}
nlohmann::json to_json(const Overpartition &pi);

nlohmann::json to_json(const AsymRow &row);

} // namespace mexlab

#endif
