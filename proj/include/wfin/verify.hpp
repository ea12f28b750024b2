#pragma once

// Verification suites: each runs one family of identities exhaustively over
// a parameter range and reports every failing instance.

#include "wfin/serialize.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wfin {

/// Unset fields fall back to each suite's own default range.
struct RunConfig {
    std::optional<int> n;
    std::optional<int> k;
    std::optional<int> D;
    std::optional<int> N;
    std::optional<int> max;
    std::uint64_t seed = 1;
};

struct SuiteReport {
    std::string suite;
    std::string criterion;
    std::int64_t checks = 0;
    std::int64_t failed = 0;
    std::vector<std::string> failures;  // first few counterexamples
    json facts = json::object();

    bool passed() const { return failed == 0 && checks > 0; }
};

struct SuiteInfo {
    std::string name;
    std::string criterion;
    std::string description;
    std::function<SuiteReport(const RunConfig&)> run;
};

const std::vector<SuiteInfo>& suites();
/// nullptr for an unknown name.
const SuiteInfo* find_suite(const std::string& name);

SuiteReport verify_hom_equivalence(const RunConfig& cfg);
SuiteReport verify_hilbert_ad(const RunConfig& cfg);
SuiteReport verify_kernel(const RunConfig& cfg);
SuiteReport verify_fsigma(const RunConfig& cfg);
SuiteReport verify_day(const RunConfig& cfg);
SuiteReport verify_ideal_lattice(const RunConfig& cfg);
SuiteReport verify_prime_chain(const RunConfig& cfg);
SuiteReport verify_characters(const RunConfig& cfg);
SuiteReport verify_free_rank(const RunConfig& cfg);
SuiteReport verify_multiplicativity(const RunConfig& cfg);
SuiteReport verify_dominance(const RunConfig& cfg);
SuiteReport verify_phi(const RunConfig& cfg);

json to_json(const SuiteReport& r);

}  // namespace wfin
