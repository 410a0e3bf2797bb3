#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hopfmzv {

enum class Suite { hopf_shuffle, hopf_qsh, morphism, order, rota_baxter, triangular, double_shuffle };

std::vector<Suite> all_suites();
std::string suite_name(Suite s);
/// Accepts the CLI spelling ("hopf-shuffle", ...). Returns nullopt if unknown.
std::optional<Suite> parse_suite(const std::string& name);

struct PropertyResult {
    std::string suite;
    std::string property;
    unsigned max_weight = 0;
    std::size_t checks = 0;
    bool passed = true;
    /// Populated on failure.
    std::string counterexample;
    double seconds = 0;
};

/// Runs one property suite. Without `max_weight` every property uses its
/// documented default bound; with it, that bound is replaced by `max_weight`.
/// Stops a property at its first counterexample.
std::vector<PropertyResult> run_suite(Suite suite, std::optional<unsigned> max_weight = {});

/// JSON report of a batch of results.
std::string report_json(const std::vector<PropertyResult>& results);

} // namespace hopfmzv
