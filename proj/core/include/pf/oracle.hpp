#pragma once

// Brute-force verification engines. Nothing in here knows about the closed
// forms it is used to check; the trajectory oracles integrate the
// unexpanded integrands directly.

#include <functional>
#include <string>

namespace pf::oracle {

using RealFunction = std::function<double(double)>;

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_depth = 30;

    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
};

// Adaptive 7/15-point Gauss-Kronrod bisection. The result is a pure
// function of (f, lo, hi, spec). Throws ConvergenceError (carrying the best
// estimate) when a panel still fails its tolerance at max_depth.
QuadratureResult integrate_detailed(const RealFunction& f, double lo, double hi,
                                    const QuadratureSpec& spec = {});

double integrate(const RealFunction& f, double lo, double hi, const QuadratureSpec& spec = {});

// Central difference of order 1 or 2, O(h^2) error.
double finite_diff(const RealFunction& f, double x, double h, int order);

// Bracketed root (TOMS 748) terminated when the bracket is narrower than
// `tol`. Throws BracketingError if f(lo) and f(hi) share a sign.
double solve_root(const RealFunction& f, double lo, double hi, double tol);

enum class TolerancePolicy { Absolute, Relative, Either };

std::string to_string(TolerancePolicy p);

struct ComparisonReport {
    std::string label;
    double series_value = 0.0;
    double oracle_value = 0.0;
    double abs_dev = 0.0;
    double rel_dev = 0.0;
    double tolerance = 0.0;
    TolerancePolicy policy = TolerancePolicy::Either;
    bool pass = false;
};

ComparisonReport compare(std::string label, double series_value, double oracle_value,
                         double tolerance, TolerancePolicy policy = TolerancePolicy::Either);

// Pass/fail record for predicates that have no natural oracle value, such as
// monotonicity sweeps. series_value carries the measured figure.
ComparisonReport check(std::string label, bool ok, double measured = 0.0);

}  // namespace pf::oracle
