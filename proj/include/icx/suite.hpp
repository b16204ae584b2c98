#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "icx/complex.hpp"
#include "icx/homology.hpp"
#include "icx/io.hpp"

namespace icx {

struct SuiteConfig {
    /// Order of the exhaustive all-graphs sweep in the implication-chain check.
    int max_n = 6;
    std::uint64_t seed = 20240917;
    bool record_timing = true;
    /// Replaces the shelling decision with one that accepts every order.
    bool mutate = false;
    SearchLimits search{5000, 4'000'000};
    CMLimits cm{};
    /// Failures kept per check; the count is always exact.
    std::size_t failure_cap = 25;
    /// When non-empty, only checks with these ids run.
    std::vector<std::string> only;
    /// Called with every independence complex whose shellability or
    /// Cohen-Macaulayness is decided. May be invoked from worker threads,
    /// but never concurrently.
    std::function<void(const SimplicialComplex&)> observer;
};

struct CheckFailure {
    Json instance;
    Json witness;
};

struct CheckRecord {
    std::string id;
    int criterion = 0;
    /// The statement under test, in words.
    std::string claim;
    /// "independence", "cover" or "n/a".
    std::string reading = "n/a";
    std::string family;
    std::size_t instances = 0;
    /// Instances skipped because a resource cap was hit.
    std::size_t degraded = 0;
    std::size_t failure_count = 0;
    std::vector<CheckFailure> failures;
    std::optional<double> seconds;

    bool passed() const { return failure_count == 0; }
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<CheckRecord> checks;

    bool passed() const;
    Json to_json() const;
};

struct CheckInfo {
    std::string id;
    int criterion;
};

/// Every check in report order.
std::vector<CheckInfo> suite_checks();

SuiteReport run_suite(const SuiteConfig& config);

/// Named counterexample and example graphs used by the suite.
std::map<std::string, Graph> pinned_fixtures();

}  // namespace icx
