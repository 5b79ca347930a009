#pragma once

// Hydrogen-like atom: circular classical orbits of the mu-particle, the
// field energy balance E_n - E_mu, radial fields for n <= 3, and the
// particle-field orbits of the s and 2p states.

#include "pf/core.hpp"
#include "pf/oracle.hpp"

namespace pf::hydrogen {

struct HydrogenSystem {
    int z = 1;
    double mu = 0.0;  // kg
    double a0 = 0.0;  // m, hbar^2 / (mu e'^2)

    static HydrogenSystem make(int z, double mu = kConstants.electron_mass);
    void validate() const;
};

struct HydrogenOrbit {
    double r = 0.0;          // m
    double theta_dot = 0.0;  // 1/s
    double v = 0.0;          // m/s
    double l_c = 0.0;        // J s
    double e_mu = 0.0;       // J
};

// Circular orbit balancing the Coulomb and centrifugal forces.
HydrogenOrbit circular_orbit(const HydrogenSystem& sys, double r);

// The same orbit completed from the angular velocity, which fixes r through
// theta_dot^2 = Z e'^2 / (mu r^3).
HydrogenOrbit orbit_from_theta_dot(const HydrogenSystem& sys, double theta_dot);

struct HState {
    int n = 1;
    int l = 0;
    int m_l = 0;
    double a_ha = 0.0;  // m
    double e_n = 0.0;   // J
};

HState make_state(const HydrogenSystem& sys, int n, int l, int m_l, double amplitude = 0.0);

// -1/2 mu (Z e'^2/hbar)^2 / n^2
double level_energy(const HydrogenSystem& sys, int n);

// E_n - E_mu(r) = -1/2 mu (Z e'^2/hbar)^2 [1/n^2 - (a0/Z)/r]
double field_energy(const HydrogenSystem& sys, const HState& state, double r);

// r at which the field energy vanishes, n^2 a0 / Z.
double balance_radius(const HydrogenSystem& sys, int n);

// Normalized radial function R_{n,l}(r) for n <= 3.
double radial_function(const HydrogenSystem& sys, int n, int l, double r);

// N_{n,l} such that R_{n,l} = N_{n,l} P_{n,l}(r) exp(-Z r / n a0), with
// P_{1,0} = 1, P_{2,0} = 1 - Zr/2a0, P_{2,1} = r, P_{3,0} = 1 - 2Zr/3a0 + 2(Zr)^2/27a0^2,
// P_{3,1} = r (1 - Zr/6a0), P_{3,2} = r^2.
double radial_normalization(const HydrogenSystem& sys, int n, int l);

// chi_{n,l}(r) = (A / N) R_{n,l}(r) = A P_{n,l}(r) exp(-Z r / n a0). For 2p
// this is A r exp(-Z r / 2a0).
double radial_field(const HydrogenSystem& sys, const HState& state, double r);

// Theta factor of Y_{l,m} = S_{l,m}(theta) T_m(phi), T_m = e^{i m phi}/sqrt(2 pi).
double theta_factor(int l, int m, double theta);

enum class VelocityForm { Linearized, Exact };

// Linearized: r theta_dot (1 + chi^2 S^2 / (4 pi r^2)); exact: square root of
// (1 + chi^2 S^2 / (2 pi r^2)). For s-states the angle-independent field
// term is absorbed into the hidden angular velocity and r theta_dot is returned.
double pf_velocity(const HydrogenSystem& sys, const HState& state, double r, double theta,
                   double theta_dot, VelocityForm form = VelocityForm::Linearized);

// Worked 2p velocity laws as printed:
//   p0:   v (1 + (3/8pi)  A^2 e^{-Zr/a0} sin^2 theta)
//   p+-1: v (1 + (3/16pi) A^2 e^{-Zr/a0} cos^2 theta)
// These place the angular dependence on the complement of S_{1,m}^2, so they
// differ from pf_velocity for l = 1 by theta -> pi/2 - theta.
enum class PState { P0, PPlusMinus1 };

double pf_velocity_2p(const HydrogenSystem& sys, double a_ha, double r, double theta,
                      double theta_dot, PState which);

struct Vec3 {
    double x;
    double y;
    double z;

    double norm() const;
};

// Point on the classical sphere of radius r, x = r sin(theta) cos(phi) etc.
Vec3 spherical_point(double r, double theta, double phi);

// s-state PF orbit: identical to the classical orbit component by component.
Vec3 orbit_s_state(double r, double theta, double phi);

// p0:  r [1 + (A^2/8pi)  e^{-Zr/a0} (1 + cos^2 theta)]
// p+-1: r [1 + (A^2/16pi) e^{-Zr/a0} (1 + sin^2 theta)]
double orbit_2p(const HydrogenSystem& sys, double a_ha, double r, double theta, PState which);

struct Diameters {
    double major;
    double minor;
};

// Extremes of q/r over theta (attained at theta = 0 and pi/2).
Diameters orbit_2p_diameters(const HydrogenSystem& sys, double a_ha, double r, PState which);

// (1 + 3A^2/8pi) - (1 + 3A^2/4pi)^{1/2}
double approximation_gap(double a_ha);

Vec3 cartesian_components_2p0(const HydrogenSystem& sys, double a_ha, double r, double theta,
                              double phi);

// <1/r> over |R_{n,l}|^2 r^2 by adaptive quadrature.
double mean_inverse_radius(const HydrogenSystem& sys, int n, int l,
                           const oracle::QuadratureSpec& spec = {});

// <E_mu> = -1/2 Z e'^2 <1/r>.
double mean_particle_energy(const HydrogenSystem& sys, int n, int l,
                            const oracle::QuadratureSpec& spec = {});

// <E_n - E_mu>, zero up to quadrature error.
double mean_field_energy(const HydrogenSystem& sys, const HState& state,
                         const oracle::QuadratureSpec& spec = {});

}  // namespace pf::hydrogen
