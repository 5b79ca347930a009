#include "pf/oracle.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>
#include <limits>

#include "pf/error.hpp"

namespace pf::oracle {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;

struct Panel {
    double value;
    double error;
};

Panel kronrod_panel(const RealFunction& f, double lo, double hi) {
    double error = 0.0;
    // max_depth = 0 evaluates the single-panel G7/K15 pair only. Boost reports
    // that error on the reference interval [-1, 1], so it is rescaled here.
    const double value = Rule::integrate(f, lo, hi, 0, 0.0, &error);
    return {value, error * 0.5 * (hi - lo)};
}

struct Accumulator {
    double value = 0.0;
    double error = 0.0;
    int panels = 0;
    bool converged = true;
};

// Left-to-right recursion keeps the summation order fixed.
void refine(const RealFunction& f, double lo, double hi, const Panel& whole, double abs_budget,
            double rel_tol, int depth, int max_depth, Accumulator& acc) {
    const double tol = std::max(abs_budget, rel_tol * std::abs(whole.value));
    if (whole.error <= tol || depth >= max_depth) {
        if (whole.error > tol) acc.converged = false;
        acc.value += whole.value;
        acc.error += whole.error;
        ++acc.panels;
        return;
    }
    const double mid = 0.5 * (lo + hi);
    const Panel left = kronrod_panel(f, lo, mid);
    const Panel right = kronrod_panel(f, mid, hi);
    refine(f, lo, mid, left, 0.5 * abs_budget, rel_tol, depth + 1, max_depth, acc);
    refine(f, mid, hi, right, 0.5 * abs_budget, rel_tol, depth + 1, max_depth, acc);
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw ValidationError("QuadratureSpec: tolerances must be positive");
    }
    if (max_depth < 10) throw ValidationError("QuadratureSpec: max_depth must be >= 10");
}

QuadratureResult integrate_detailed(const RealFunction& f, double lo, double hi,
                                    const QuadratureSpec& spec) {
    spec.validate();
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw ValidationError("integrate: non-finite bounds");
    if (lo > hi) throw DomainError("integrate: lo must not exceed hi");
    if (lo == hi) return {};

    Accumulator acc;
    refine(f, lo, hi, kronrod_panel(f, lo, hi), spec.abs_tol, spec.rel_tol, 0, spec.max_depth,
           acc);
    if (!std::isfinite(acc.value)) throw ValidationError("integrate: integrand is not finite");
    if (!acc.converged) {
        throw ConvergenceError("integrate: max_depth exhausted before tolerance was met",
                               acc.value);
    }
    return {acc.value, acc.error, acc.panels};
}

double integrate(const RealFunction& f, double lo, double hi, const QuadratureSpec& spec) {
    return integrate_detailed(f, lo, hi, spec).value;
}

double finite_diff(const RealFunction& f, double x, double h, int order) {
    if (!(h > 0.0)) throw DomainError("finite_diff: step must be positive");
    switch (order) {
        case 1: return (f(x + h) - f(x - h)) / (2.0 * h);
        case 2: return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
        default: throw DomainError("finite_diff: order must be 1 or 2");
    }
}

double solve_root(const RealFunction& f, double lo, double hi, double tol) {
    if (!(tol > 0.0)) throw DomainError("solve_root: tolerance must be positive");
    if (lo > hi) std::swap(lo, hi);
    const double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if (std::signbit(f_lo) == std::signbit(f_hi)) {
        throw BracketingError("solve_root: f(lo) and f(hi) have the same sign");
    }
    std::uintmax_t max_iter = 500;
    auto done = [tol](double a, double b) { return std::abs(b - a) <= tol; };
    const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, done, max_iter);
    return 0.5 * (a + b);
}

std::string to_string(TolerancePolicy p) {
    switch (p) {
        case TolerancePolicy::Absolute: return "abs";
        case TolerancePolicy::Relative: return "rel";
        case TolerancePolicy::Either: return "abs|rel";
    }
    return "?";
}

ComparisonReport compare(std::string label, double series_value, double oracle_value,
                         double tolerance, TolerancePolicy policy) {
    ComparisonReport r;
    r.label = std::move(label);
    r.series_value = series_value;
    r.oracle_value = oracle_value;
    r.abs_dev = std::abs(series_value - oracle_value);
    r.rel_dev = oracle_value != 0.0 ? r.abs_dev / std::abs(oracle_value)
                                    : (r.abs_dev == 0.0 ? 0.0
                                                        : std::numeric_limits<double>::infinity());
    r.tolerance = tolerance;
    r.policy = policy;
    const bool abs_ok = r.abs_dev <= tolerance;
    const bool rel_ok = r.rel_dev <= tolerance;
    switch (policy) {
        case TolerancePolicy::Absolute: r.pass = abs_ok; break;
        case TolerancePolicy::Relative: r.pass = rel_ok; break;
        case TolerancePolicy::Either: r.pass = abs_ok || rel_ok; break;
    }
    if (!std::isfinite(series_value) || !std::isfinite(oracle_value)) r.pass = false;
    return r;
}

ComparisonReport check(std::string label, bool ok, double measured) {
    ComparisonReport r;
    r.label = std::move(label);
    r.series_value = measured;
    r.oracle_value = measured;
    r.policy = TolerancePolicy::Absolute;
    r.pass = ok;
    return r;
}

}  // namespace pf::oracle
