#pragma once

// Cubic (Duffing-like) extension of the stationary field equation,
//   chi''(u) + chi(u) - (eps / k^2) chi(u)^3 = 0,   u = k x,
// solved to first order in eps by scaled parameters, and the resulting
// quantization and energy levels for the box.

#include "pf/boxmode.hpp"

namespace pf::nonlinear {

// Largest |eps A^2 / k^2| accepted by the first-order solution.
inline constexpr double kValidityThreshold = 0.1;

struct NonlinearParams {
    double eps_prime = 0.0;  // coupling of the cubic field force
    double eps = 0.0;        // eps' / (m v_P^2)
    double a_tilde = 0.0;    // m

    static NonlinearParams from_coupling(double eps_prime, double m, double v_p, double a_tilde);
    static NonlinearParams from_eps(double eps, double a_tilde);

    // eps A^2 / k^2
    double strength(double k) const;
    // Throws ValidityError when |strength(k)| exceeds the threshold.
    void require_valid(double k) const;
};

inline constexpr double kPhaseSine = -0.5 * kPi;

// A cos[w k x + B] - (eps A^3 / 32 k^2) cos[3 (w k x + B)], w = 1 - 3 eps A^2 / 8k^2.
// B = -pi/2 yields the sine form that vanishes at x = 0.
double duffing_solution(const NonlinearParams& p, double k, double x, double phase = kPhaseSine);

// d^2 chi / du^2 of duffing_solution, analytic.
double duffing_second_derivative_u(const NonlinearParams& p, double k, double x,
                                   double phase = kPhaseSine);

// chi''(u) + chi(u) - (eps/k^2) chi^3 at u = k x, analytic derivatives.
double duffing_residual(const NonlinearParams& p, double k, double x, double phase = kPhaseSine);

// Radial form of the cubic field equation, lap(chi) + k^2 chi - eps chi^3, for
// callers that supply a field value and its Laplacian.
double cubic_field_residual(double chi, double laplacian, double k, double eps);

// (n pi / 2a) [1 + (1 + 3 eps A^2 a^2 / (2 n^2 pi^2))^{1/2}]
double quantized_k(const NonlinearParams& p, const box::BoxSystem& sys, int n);

// (1 - 3 eps A^2 / 8k^2) k a - n pi
double quantization_residual(const NonlinearParams& p, const box::BoxSystem& sys, int n,
                             double k);

struct NonlinearLevel {
    int n = 0;
    double amplitude = 0.0;  // A_n taken as the nonlinear amplitude
    double k_linear = 0.0;
    double k_n = 0.0;
    double e_linear = 0.0;
    double e_n = 0.0;
};

// n^2 h^2 / 8ma^2 [1/2 + (1/4 + 3 eps A_n^2 a^2 / (8 n^2 pi^2))^{1/2}]^2 with A_n
// from the linear box amplitude. At eps = 0 this is the linear box level
// bit for bit.
NonlinearLevel energy_level(double eps, const box::BoxSystem& sys, int n);
double energy_levels(const NonlinearParams& p, const box::BoxSystem& sys, int n);

// eps A^2 / (32 k^2), relative size of the third harmonic.
double cubic_term_negligibility(const NonlinearParams& p, double k_n);

}  // namespace pf::nonlinear
