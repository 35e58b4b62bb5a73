#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace tempsec {

// One named verification experiment with a machine-readable report.
struct SuiteResult {
    std::string name;
    bool pass = false;
    nlohmann::json details;
};

// The experiments behind `tempsec verify <suite>`. Each runs with fixed
// documented parameters scaled by `trials` where sampling is involved, and a
// deterministic seed, so a pass is reproducible.
SuiteResult suite_slice_floor(long trials, std::uint64_t seed, int workers);          // "theorem1"
SuiteResult suite_adversarial_ceiling(long trials, std::uint64_t seed, int workers);  // "theorem4"
SuiteResult suite_ksecretary(long trials, std::uint64_t seed, int workers);
SuiteResult suite_indep_grid(long trials, std::uint64_t seed);                        // "theorem3"
SuiteResult suite_capacity_grid(long trials, std::uint64_t seed);                     // "theorem6"
SuiteResult suite_oracles(long instances, std::uint64_t seed);
SuiteResult suite_q_geometric(long trials, std::uint64_t seed);                       // "lemma-q"
SuiteResult suite_subset_topk(long sets, std::uint64_t seed);                         // "lemma-subsets"
SuiteResult suite_truncated_binomial();                                               // "lemma-binmid"
SuiteResult suite_quartiles(long trials, std::uint64_t seed);
SuiteResult suite_dominance(long trials, std::uint64_t seed);

// Maps a verify-suite token to its runner with default parameters; returns
// false for unknown names.
bool run_named_suite(const std::string& name, std::uint64_t seed, int workers,
                     long trials_override, SuiteResult& out);

std::vector<std::string> suite_names();

} // namespace tempsec
