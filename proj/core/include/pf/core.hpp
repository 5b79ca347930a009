#pragma once

// Shared constants, energy bookkeeping and one-dimensional particle-field
// kinematics. SI units throughout; Coulomb couplings carry the single
// constant e'^2 = e^2 / (4 pi eps0).

#include <numbers>
#include <string_view>

namespace pf {

inline constexpr double kPi = std::numbers::pi;

struct PhysConstants {
    double hbar;                // J s
    double planck_h;            // J s
    double electron_mass;       // kg
    double gaussian_charge_sq;  // J m, e'^2
    double bohr_radius;         // m
};

// CODATA 2018 values.
constexpr PhysConstants codata() {
    constexpr double hbar = 1.054571817e-34;
    constexpr double me = 9.1093837015e-31;
    constexpr double e = 1.602176634e-19;
    constexpr double eps0 = 8.8541878128e-12;
    constexpr double e2 = e * e / (4.0 * kPi * eps0);
    return PhysConstants{hbar, 2.0 * kPi * hbar, me, e2, hbar * hbar / (me * e2)};
}

inline constexpr PhysConstants kConstants = codata();
inline constexpr double kHbar = kConstants.hbar;

// Mutually consistent (p, k, lambda) triple with p = hbar k, lambda = h / p.
struct DeBroglie {
    double p;
    double k;
    double lambda;

    static DeBroglie from_momentum(double p);
    static DeBroglie from_wavenumber(double k);
};

// E = E_P + E_F with kinetic/potential splits of each part.
struct EnergyBudget {
    double e_total = 0.0;
    double e_particle = 0.0;
    double e_field = 0.0;
    double k_particle = 0.0;
    double v_particle = 0.0;
    double k_field = 0.0;
    double v_field = 0.0;
};

inline constexpr double kIdentityRelTol = 1e-12;
inline constexpr double kQuadratureRelTol = 1e-10;

// True iff additivity and both splits hold to `rel_tol` and both kinetic
// terms are non-negative. Throws ValidationError on non-finite fields.
bool energy_budget_check(const EnergyBudget& b, double rel_tol = kIdentityRelTol);

enum class RegionClass { Allowed, Forbidden, ClassicalLimit };

std::string_view to_string(RegionClass r);

// Forbidden takes precedence: a negative E_F + K_P makes the de Broglie
// momentum imaginary regardless of how small E_F is.
RegionClass classify_region(double e_field, double k_particle, double eps);

// 1e-6 * |E_P|.
double default_classical_eps(double e_particle);

// f_F = m v_P^2 d|chi'|/dx + f_P |chi'|
double field_force_1d(double m, double v_p, double chi_prime, double d_abs_chi_prime_dx,
                      double f_p);

// Real stationary field form: -m wbar^2 chi + f_P chi', wbar^2 = v_P^2 k^2.
double field_force_stationary(double m, double v_p, double k, double chi, double chi_prime,
                              double f_p);

// K_PF = g^2 K_P (1 + chi'^2)
double kinetic_pf(double k_particle, double chi_prime_sq, double g = 1.0);

// f_PF = g [f_P (1+chi'^2)^{1/2} + m v^2 chi' chi'' / (1+chi'^2)^{1/2}]
double pf_force_stationary(double g, double f_p, double chi_prime, double chi_second, double m,
                           double v);

}  // namespace pf
