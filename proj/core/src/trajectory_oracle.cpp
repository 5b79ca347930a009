#include "pf/trajectory_oracle.hpp"

#include <cmath>

#include "pf/error.hpp"

namespace pf::oracle {

double exact_box_trajectory(const box::BoxMode& mode, double x, const QuadratureSpec& spec) {
    return exact_box_trajectory(mode, x, spec, mode.g_npf);
}

double exact_box_trajectory(const box::BoxMode& mode, double x, const QuadratureSpec& spec,
                            double g) {
    if (!(x >= 0.0 && x <= mode.system.a)) {
        throw DomainError("exact_box_trajectory: x outside [0, a]");
    }
    if (!(g > 0.0)) throw DomainError("exact_box_trajectory: g must be positive");
    if (x == 0.0) return 0.0;
    // Integrate over u = s / x so the tolerances act on a dimensionless integral.
    auto integrand = [&](double u) {
        const double cp = box::chi_prime(mode, u * x);
        return std::sqrt(1.0 + cp * cp);
    };
    return g * x * integrate(integrand, 0.0, 1.0, spec);
}

double exact_osc_trajectory(const osc::OscMode& mode, const osc::OscSystem& sys, double r_bar,
                            const QuadratureSpec& spec) {
    if (r_bar == 0.0) return 0.0;
    auto integrand = [&](double u) {
        return std::sqrt(1.0 + osc::trajectory_gradient_sq(mode, sys, u * r_bar) / (4.0 * kPi));
    };
    return r_bar * integrate(integrand, 0.0, 1.0, spec);
}

}  // namespace pf::oracle
