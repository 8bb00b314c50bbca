#pragma once

#include <string>
#include <vector>

#include "conering/element.hpp"

#include "json.hpp"

namespace conering {

/* Identity suites: each suite bundles the invariants of one part of the
   engine and checks them exhaustively up to a degree bound. A failing
   check carries the minimal counterexample (checks scan degrees in
   ascending canonical order and stop at the first failure), with both
   sides expanded in the CD basis. Serialized reports are deterministic:
   timings stay in memory and never reach the text/JSON forms. */

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // empty when passing
    double millis = 0.0;
};

struct SuiteReport {
    std::string suite;
    int max_degree = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

// Known ids: ring-axioms, simplices, rank-product, rank-cone,
// cone-decomposition, counting-construction, quasi-simplex.
std::vector<std::string> suite_ids();

// Runs every check of the suite up to max_degree. Checks execute
// concurrently; results are reported in fixed order. Throws
// std::invalid_argument on an unknown suite id.
SuiteReport run_suite(const std::string& id, int max_degree);

std::string suite_report_to_text(const SuiteReport& report);
nlohmann::ordered_json suite_report_to_json(const SuiteReport& report);

}  // namespace conering
