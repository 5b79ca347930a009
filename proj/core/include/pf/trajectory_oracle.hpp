#pragma once

// Quadrature of the unexpanded trajectory integrals. These are the
// references the truncated series are compared against.

#include "pf/boxmode.hpp"
#include "pf/oracle.hpp"
#include "pf/oscillator.hpp"

namespace pf::oracle {

// g * integral_0^x (1 + chi_n'(s)^2)^{1/2} ds with g = g_npf.
double exact_box_trajectory(const box::BoxMode& mode, double x, const QuadratureSpec& spec = {});
double exact_box_trajectory(const box::BoxMode& mode, double x, const QuadratureSpec& spec,
                            double g);

// integral_0^r (1 + G(s) / 4pi)^{1/2} ds with G = osc::trajectory_gradient_sq,
// the integrand whose first-order expansion the oscillator series is.
double exact_osc_trajectory(const osc::OscMode& mode, const osc::OscSystem& sys, double r_bar,
                            const QuadratureSpec& spec = {});

}  // namespace pf::oracle
