#include "opq/report.hpp"

#include <iterator>

namespace opq {

void BranchingReport::merge(BranchingReport other)
{
    checks += other.checks;
    failures.insert(failures.end(), std::make_move_iterator(other.failures.begin()),
                    std::make_move_iterator(other.failures.end()));
}

Json to_json(const Failure& f)
{
    Json out;
    out["check"] = f.check;
    out["params"] = f.params;
    out["expected"] = f.expected;
    out["got"] = f.got;
    return out;
}

Json to_json(const BranchingReport& report)
{
    Json out;
    out["grid"] = report.grid;
    out["checks"] = report.checks;
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        failures.push_back(to_json(f));
    }
    out["failures"] = std::move(failures);
    return out;
}

} // namespace opq
