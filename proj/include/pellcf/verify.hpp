#pragma once

#include <string>
#include <vector>

namespace pellcf {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
};

constexpr int kCriteria = 13;

/// Runs one acceptance criterion, 1..kCriteria. Exceptions thrown while
/// checking count as failure and are reported in detail.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

/// "[PASS] 3 title: detail" per line.
std::string format_result(const CriterionResult& r);

/// Acceptance lines followed by the typo ledger.
std::string verify_ledger(const std::vector<CriterionResult>& results);

}  // namespace pellcf
