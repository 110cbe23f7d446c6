#pragma once

#include "wn/classifier.hpp"
#include "wn/squarecomm.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wn {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Named verification suites, runnable from the CLI and from the
/// acceptance tests. Identifiers mirror the rule catalog used in verdict
/// traces ("2.1", "2.4", "2.8", "3.9", "3.10", "3.11", "1.9", "classifier",
/// "properties").
std::vector<CheckResult> verify_xi_table();                                   // 2.8
std::vector<CheckResult> verify_integrality_equivalence(int max_n);           // 2.4
std::vector<CheckResult> verify_centralizer_embedding();                      // 2.1
std::vector<CheckResult> verify_square_commuting_catalog(int n);              // 3.10
std::vector<CheckResult> verify_rank4_sign_pairs(Family family);              // 3.11
std::vector<CheckResult> verify_projection_necessity();                       // 3.9
std::vector<CheckResult> verify_induction_oracle();                           // 1.9
std::vector<CheckResult> verify_classifier_verdicts();                        // classifier
std::vector<CheckResult> verify_property_suites(std::uint64_t seed, int cases);

struct SuiteRequest {
    std::string lemma;  // catalog identifier or "all"
    int n = 0;          // 0 means the suite's full default range
    std::uint64_t seed = 20240801;
    int cases = 10000;
    int workers = 1;
};

std::vector<CheckResult> run_suite(const SuiteRequest& req);
std::vector<std::string> suite_catalog();

}  // namespace wn
