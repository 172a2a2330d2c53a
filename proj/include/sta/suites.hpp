#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace sta {

struct SuiteOptions {
    std::uint64_t seed = 1;
    /// Corpus size for the randomized checks; 0 keeps each check's
    /// default.
    int count = 0;
    /// Self-test hook: runs the bosonization theorem with the magnetic
    /// current sign deliberately flipped. A correct engine must then fail
    /// with a nonzero residual dump.
    bool flip_magnetic_sign = false;
};

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skip;
    std::string detail;
    nlohmann::json residual;  // canonical dump of the first failing residual
    std::string inputs_digest;
    std::uint64_t seed = 0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int count = 0;
    bool flip_magnetic_sign = false;
    std::vector<CheckResult> checks;  // sorted by check name

    int passed() const;
    int failed() const;
    int skipped() const;
    bool all_passed() const { return failed() == 0; }

    nlohmann::json to_json() const;
    /// Canonical report text: deterministic bytes for a given
    /// (suite, seed, count, flip) tuple.
    std::string dump() const;
};

const std::vector<std::string>& suite_names();  // includes "all"
bool is_known_suite(const std::string& name);

/// Runs one suite. Checks execute independently (possibly concurrently,
/// each owning its inputs and a seed derived from the suite seed and the
/// check name); results are sorted by name before emission, so the report
/// does not depend on scheduling.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// Runs a single named check; used by the acceptance harness to drive
/// criterion-specific corpus sizes.
CheckResult run_check(const std::string& check_name, const SuiteOptions& options = {});

const std::vector<std::string>& checks_in_suite(const std::string& suite);

}  // namespace sta
