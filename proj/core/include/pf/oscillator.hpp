#pragma once

// Two-body isotropic harmonic oscillator in the relative coordinate
// r_bar = r - r_eq. The mu-particle oscillates classically with amplitude L;
// the radial field chi_n(r_bar) carries the (negative) field energy
// E_n - E_mu.

#include "pf/core.hpp"

namespace pf::osc {

struct OscSystem {
    double mu = 0.0;      // kg
    double omega0 = 0.0;  // 1/s
    double alpha = 0.0;   // 1/m^2, mu omega0 / hbar
    double cap_l = 0.0;   // m, classical amplitude L
    double r_eq = 0.0;    // m

    static OscSystem make(double mu, double omega0, double cap_l, double r_eq = 0.0);
    // Picks omega0 so that mu omega0 / hbar = alpha.
    static OscSystem from_alpha(double mu, double alpha, double cap_l, double r_eq = 0.0);

    void validate() const;
};

// Reduced mass of the hydrogen molecule, m_p / 2.
inline constexpr double kHydrogenMoleculeMu = 1.67262192369e-27 / 2.0;

struct OscMode {
    int n = 0;
    int l = 0;
    int m_l = 0;
    double a_osc = 0.0;  // m
    double e_n = 0.0;
    double e_mu = 0.0;
    double e_field = 0.0;
};

OscMode make_mode(const OscSystem& sys, int n, double amplitude, int l = 0, int m_l = 0);

EnergyBudget budget(const OscMode& mode);

struct ClassicalState {
    double r_bar;  // m
    double p_mu;   // kg m/s
};

// r_bar = L cos(omega0 t + phase), p_mu = -mu omega0 L sin(omega0 t + phase).
ClassicalState classical_motion(const OscSystem& sys, double phase, double t);

// K_mu = p_mu^2 / 2mu = (mu omega0^2 / 2)(L^2 - r_bar^2), zero outside |r_bar| <= L.
double kinetic_mu(const OscSystem& sys, double r_bar);

// L = ((2n+1)/alpha)^{1/2}: the amplitude at which E_n - E_mu vanishes.
double classical_threshold(const OscSystem& sys, int n);

// exp(-alpha L^2), the decay of chi^2 at the turning points.
double boundary_suppression(const OscSystem& sys);

// n = 0: A exp(-alpha r^2/2); n = 1: A r exp(-alpha r^2/2); n >= 2 uses the
// Hermite extension A H_n(sqrt(alpha) r) exp(-alpha r^2/2). Evaluation is
// permitted outside [-L, L].
double radial_field(const OscMode& mode, const OscSystem& sys, double r_bar);
double radial_field_derivative(const OscMode& mode, const OscSystem& sys, double r_bar);

// |Y_{l,m}(theta, phi)|^2, orthonormal convention.
double ylm_sq(int l, int m, double theta);

// K_mu chi_n'^2 |Y_{l,m_l}|^2 with theta-dot = phi-dot = 0.
double kinetic_field(const OscMode& mode, const OscSystem& sys, double r_bar, double theta,
                     double phi);

// Squared field gradient inside the trajectory integrand. The printed
// first-order series integrate 1 + G/(16 pi) with
//   n = 0: G = (alpha A)^2 r^2 exp(-alpha r^2)
//   n = 1: G = alpha A^2 (1 - alpha r^2)^2 exp(-alpha r^2)
// which is the expansion of (1 + chi'^2 / 4pi)^{1/2} for chi'^2 = G / 2.
// Velocity, radial PF kinetic energy and the quadrature oracle all use this
// gradient so that they stay consistent with the series. n in {0, 1}.
double trajectory_gradient_sq(const OscMode& mode, const OscSystem& sys, double r_bar);

enum class SeriesOrder { TwoTerm, ThreeTerm };

// n = 0: r + (alpha A)^2 r^3 e^{-alpha r^2}/(48 pi) [+ alpha^3 A^2 r^5 e^{-alpha r^2}/(120 pi)]
// n = 1: r + alpha A^2 r e^{-alpha r^2}/(16 pi)    [+ alpha^3 A^2 r^5 e^{-alpha r^2}/(80 pi)]
// Throws DomainError for |r_bar| > L and UnsupportedError for n > 1.
double trajectory(const OscMode& mode, const OscSystem& sys, double r_bar, SeriesOrder order);

// q(r)/r - 1 evaluated from the correction terms alone, so values far
// below machine epsilon relative to r are still resolved.
double trajectory_relative_excess(const OscMode& mode, const OscSystem& sys, double r_bar,
                                  SeriesOrder order);

// v_mu (1 + chi'^2 / 8pi), g_PF = (2 sqrt(pi))^{-1} folded in.
double velocity(const OscMode& mode, const OscSystem& sys, double r_bar, double v_mu);

// K_mu (1 + chi'^2 / 4pi)
double kinetic_pf_radial(const OscMode& mode, const OscSystem& sys, double r_bar, double k_mu);

// Field amplitude calibration. For alpha within half a decade of 1e20 m^-2
// (hydrogen-molecule-like) returns 1e-9 m (n = 0) and 1e-10 m (n = 1).
// Otherwise n = 1 solves q_1(1/sqrt(alpha)) = 1.01/sqrt(alpha) on the
// three-term series and n = 0 keeps the same tenfold ratio to A_1.
double amplitude_estimate(const OscSystem& sys, int n);

// Solves q_1(1/sqrt(alpha)) sqrt(alpha) = target for A_1.
double calibrate_excited_amplitude(const OscSystem& sys, double target = 1.01);

}  // namespace pf::osc
