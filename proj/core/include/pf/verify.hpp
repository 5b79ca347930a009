#pragma once

// The quantitative acceptance suite. Each criterion produces one or more
// comparison reports; a criterion passes when all of them pass.

#include <map>
#include <string>
#include <vector>

#include "pf/oracle.hpp"

namespace pf::verify {

struct VerifyOptions {
    // Relative perturbation applied to the computed side of every comparison
    // in the named criterion ("C05" etc., or "all"). Used as a negative
    // control: a 1% shift must make the targeted criterion fail.
    std::map<std::string, double> perturbation;
    oracle::QuadratureSpec quadrature{};
    int sweep_points = 10000;
};

struct CriterionResult {
    std::string id;
    std::string title;
    std::vector<oracle::ComparisonReport> reports;
    std::string error;  // non-empty when the criterion threw

    bool pass() const;
};

// Identifiers in execution order.
const std::vector<std::string>& criterion_ids();

// Runs a single criterion. Throws ValidationError for an unknown id.
CriterionResult run_criterion(const std::string& id, const VerifyOptions& options = {});

std::vector<CriterionResult> run_verification(const VerifyOptions& options = {});

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace pf::verify
