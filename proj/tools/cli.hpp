#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace qproduct::cli {

/// Runs one invocation (argv without the program name). Writes the JSON report, or a
/// structured error, to `out`. Returns 0 when every asserted check holds, 1 on a failed
/// check or runtime error, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out);

/// Report object for an invocation, without printing. Throws on errors.
nlohmann::json report(const std::vector<std::string>& args);

struct GoldenCase {
    std::string name;  // file stem under the goldens directory
    std::vector<std::string> args;
};

/// Pipelines covered by reproduce-paper.
const std::vector<GoldenCase>& golden_cases();

/// Canonical serialization used for goldens and --out.
std::string serialize(const nlohmann::json& j);

/// Human-readable rendering for --pretty.
std::string render_pretty(const nlohmann::json& j);

/// Paths where two reports differ, "" for the root.
std::vector<std::string> json_diff(const nlohmann::json& expected, const nlohmann::json& actual);

}  // namespace qproduct::cli
