#pragma once
// The acceptance suite: one entry per numbered criterion, shared between the
// `qtb selftest` subcommand and the ctest acceptance binary.

#include <string>
#include <vector>

namespace qtb {

enum class TestLevel { Fast, Full };

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string message; // empty on success, diagnostic on failure
    double seconds = 0.0;
};

// The twelve criteria, in order; names are stable identifiers.
int criterion_count();
std::string criterion_name(int number); // 1-based

// Runs one criterion at the chosen scale (Fast restricts sweeps to n <= 2);
// deterministic for a fixed seed.
CriterionResult run_criterion(int number, TestLevel level, unsigned seed = 20260825u);

// Runs all criteria in order.
std::vector<CriterionResult> run_acceptance(TestLevel level, unsigned seed = 20260825u);

} // namespace qtb
