#pragma once

// Particle in a one-dimensional box of width a: stationary fields chi_n,
// field energies, the particle-field trajectory q_n(x) and its velocity and
// acceleration, and the power-series machinery that justifies truncating
// (1 + chi'^2)^{1/2}.

#include <cstddef>
#include <vector>

#include "pf/core.hpp"

namespace pf::box {

struct BoxSystem {
    double m = 0.0;           // kg
    double a = 0.0;           // m
    double p_particle = 0.0;  // kg m/s, momentum of the bare particle

    void validate() const;
};

struct BoxMode {
    BoxSystem system;
    int n = 0;
    double k_n = 0.0;     // n pi / a
    double p_n = 0.0;     // hbar k_n
    double e_n = 0.0;     // p_n^2 / 2m
    double a_n = 0.0;     // field amplitude, positive root
    double b_n_sq = 0.0;  // p_n^2 / p_P^2 - 1
    double g_npf = 0.0;   // 4 p_P^2 / (p_n^2 + 3 p_P^2)

    // v_P k_n with v_P = p_P / m.
    double omega_bar() const;
    double v_particle() const { return system.p_particle / system.m; }
};

double wavenumber(const BoxSystem& sys, int n);

// hbar/p_P (1 - p_P^2/p_n^2)^{1/2}. Only requires p_P <= p_n, so it is
// usable for levels where the trajectory series would diverge.
double amplitude(const BoxSystem& sys, int n);

// Throws DomainError for a superclassical particle (p_P > p_n) and for
// b_n^2 >= 1, where the trajectory series diverges.
BoxMode make_mode(const BoxSystem& sys, int n);

// Builds the system whose particle momentum gives p_n^2 / p_P^2 = ratio.
BoxSystem system_for_ratio(double m, double a, int n, double ratio);

// Position-resolved budget: k_field(x) + v_field(x) = e_field for every x.
// The particle moves freely inside the box, so V_P = 0.
EnergyBudget field_energy(const BoxMode& mode, double x = 0.0);

// E_P / (1 - p_P^2 A_n^2 / hbar^2)
double total_energy_from_amplitude(const BoxMode& mode);

double chi(const BoxMode& mode, double x);
double chi_prime(const BoxMode& mode, double x);
double chi_second(const BoxMode& mode, double x);
double psi(const BoxMode& mode, double x);

struct SeriesCoefficients {
    double b1;
    double b2;
    double b3;
};

// Through eighth order in b, exactly as the truncated expansion of
// (1 + b^2 cos^2)^{1/2} integrates term by term. Throws for b_sq outside [0, 1).
SeriesCoefficients series_coeffs(double b_sq);

// Truncated expansion 1 + c/2 - c^2/8 + c^3/16 - 5c^4/128 with c = b^2 cos^2.
double truncated_integrand(double b_sq, double cos_sq);
double exact_integrand(double b_sq, double cos_sq);

enum class TrajectoryVariant {
    FirstOrder,  // g_npf-normalized first-order series
    Series,      // g = 1/b1 with the sin(4 k x) term kept
};

double trajectory_series(const BoxMode& mode, double x, TrajectoryVariant variant);

// Coefficient c of sin(2 k_n x) / k_n in each variant.
double sine_coefficient(const BoxMode& mode, TrajectoryVariant variant);

double velocity(const BoxMode& mode, double x, double v_p);
double pf_acceleration(const BoxMode& mode, double x, double v_p);

// Nodes and antinodes j a / (2n), j = 1 .. 2n-1.
std::vector<double> inflection_points(const BoxMode& mode);

// x(t) = v_P t + x0. Wall reflections are not modelled.
double position_at(double v_p, double t, double x0);

struct TrajectorySample {
    double x;
    double q;
};

// `points` uniform samples on [0, a], endpoints included.
std::vector<TrajectorySample> sample_trajectory(const BoxMode& mode, TrajectoryVariant variant,
                                                std::size_t points = 1000);

}  // namespace pf::box
