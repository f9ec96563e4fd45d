#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace opq {

using Json = nlohmann::ordered_json;

/// One counterexample found by a verification sweep.
struct Failure {
    std::string check;
    Json params;
    std::string expected;
    std::string got;
};

/// Result of a sweep.  `checks` counts parameter points evaluated; the
/// report passes iff no failure was recorded.
struct BranchingReport {
    Json grid = Json::object();
    std::uint64_t checks = 0;
    std::vector<Failure> failures;

    bool passed() const noexcept { return failures.empty(); }

    /// Accumulates another report's checks and failures; the grid of `this`
    /// is kept.
    void merge(BranchingReport other);
};

Json to_json(const Failure& f);
Json to_json(const BranchingReport& report);

} // namespace opq
