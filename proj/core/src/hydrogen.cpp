#include "pf/hydrogen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pf/error.hpp"

namespace pf::hydrogen {

namespace {

double coulomb(const HydrogenSystem& sys) {
    return sys.z * kConstants.gaussian_charge_sq;
}

void require_implemented(int n, int l) {
    if (n < 1 || l < 0 || l >= n) throw DomainError("hydrogen: need n >= 1 and 0 <= l < n");
    if (n > 3) throw UnsupportedError("hydrogen: radial functions are implemented for n <= 3");
}

// P_{n,l}(r) of the radial field, without the exponential.
double radial_polynomial(const HydrogenSystem& sys, int n, int l, double r) {
    const double s = sys.z * r / sys.a0;
    switch (n * 10 + l) {
        case 10: return 1.0;
        case 20: return 1.0 - s / 2.0;
        case 21: return r;
        case 30: return 1.0 - 2.0 * s / 3.0 + 2.0 * s * s / 27.0;
        case 31: return r * (1.0 - s / 6.0);
        case 32: return r * r;
        default: break;
    }
    throw UnsupportedError("hydrogen: unsupported (n, l)");
}

double common_factor(double z_over_na0) {
    return std::pow(z_over_na0, 1.5);
}

}  // namespace

HydrogenSystem HydrogenSystem::make(int z, double mu) {
    HydrogenSystem s{z, mu, kHbar * kHbar / (mu * kConstants.gaussian_charge_sq)};
    s.validate();
    return s;
}

void HydrogenSystem::validate() const {
    if (z < 1) throw DomainError("HydrogenSystem: Z must be a positive integer");
    if (!(mu > 0.0) || !(a0 > 0.0) || !std::isfinite(mu) || !std::isfinite(a0)) {
        throw DomainError("HydrogenSystem: mu and a0 must be positive and finite");
    }
}

HydrogenOrbit circular_orbit(const HydrogenSystem& sys, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("circular_orbit: r must be positive");
    const double ze2 = coulomb(sys);
    HydrogenOrbit o;
    o.r = r;
    o.theta_dot = std::sqrt(ze2 / (sys.mu * r * r * r));
    o.v = r * o.theta_dot;
    o.l_c = sys.mu * r * o.v;
    o.e_mu = -0.5 * ze2 / r;
    return o;
}

HydrogenOrbit orbit_from_theta_dot(const HydrogenSystem& sys, double theta_dot) {
    if (!(theta_dot > 0.0)) throw DomainError("orbit_from_theta_dot: theta_dot must be positive");
    const double r = std::cbrt(coulomb(sys) / (sys.mu * theta_dot * theta_dot));
    return circular_orbit(sys, r);
}

double level_energy(const HydrogenSystem& sys, int n) {
    if (n < 1) throw DomainError("level_energy: n must be >= 1");
    const double w = coulomb(sys) / kHbar;
    return -0.5 * sys.mu * w * w / (static_cast<double>(n) * n);
}

HState make_state(const HydrogenSystem& sys, int n, int l, int m_l, double amplitude) {
    if (n < 1 || l < 0 || l >= n || std::abs(m_l) > l) {
        throw DomainError("hydrogen: need n >= 1, 0 <= l < n, |m_l| <= l");
    }
    if (amplitude < 0.0) throw DomainError("hydrogen: amplitude must be non-negative");
    return HState{n, l, m_l, amplitude, level_energy(sys, n)};
}

double field_energy(const HydrogenSystem& sys, const HState& state, double r) {
    if (!(r > 0.0)) throw DomainError("field_energy: r must be positive");
    const double w = coulomb(sys) / kHbar;
    const double n2 = static_cast<double>(state.n) * state.n;
    return -0.5 * sys.mu * w * w * (1.0 / n2 - (sys.a0 / sys.z) / r);
}

double balance_radius(const HydrogenSystem& sys, int n) {
    return static_cast<double>(n) * n * sys.a0 / sys.z;
}

double radial_normalization(const HydrogenSystem& sys, int n, int l) {
    require_implemented(n, l);
    const double za = sys.z / sys.a0;
    switch (n * 10 + l) {
        case 10: return 2.0 * common_factor(za);
        case 20: return 2.0 * common_factor(za / 2.0);
        case 21: return common_factor(za / 2.0) * za / std::sqrt(3.0);
        case 30: return 2.0 * common_factor(za / 3.0);
        case 31: return 4.0 * std::sqrt(2.0) / 9.0 * common_factor(za / 3.0) * za;
        case 32: return 2.0 * std::sqrt(2.0) / (27.0 * std::sqrt(5.0)) * common_factor(za / 3.0) * za * za;
        default: break;
    }
    throw UnsupportedError("hydrogen: unsupported (n, l)");
}

double radial_function(const HydrogenSystem& sys, int n, int l, double r) {
    require_implemented(n, l);
    if (r < 0.0) throw DomainError("radial_function: r must be non-negative");
    return radial_normalization(sys, n, l) * radial_polynomial(sys, n, l, r) *
           std::exp(-sys.z * r / (n * sys.a0));
}

double radial_field(const HydrogenSystem& sys, const HState& state, double r) {
    require_implemented(state.n, state.l);
    if (r < 0.0) throw DomainError("radial_field: r must be non-negative");
    return state.a_ha * radial_polynomial(sys, state.n, state.l, r) *
           std::exp(-sys.z * r / (state.n * sys.a0));
}

double theta_factor(int l, int m, double theta) {
    if (l < 0 || std::abs(m) > l) throw DomainError("theta_factor: need l >= 0 and |m| <= l");
    return std::sqrt(2.0 * kPi) *
           std::sph_legendre(static_cast<unsigned>(l), static_cast<unsigned>(std::abs(m)), theta);
}

double pf_velocity(const HydrogenSystem& sys, const HState& state, double r, double theta,
                   double theta_dot, VelocityForm form) {
    if (!(r > 0.0)) throw DomainError("pf_velocity: r must be positive");
    const double v = r * theta_dot;
    if (state.l == 0) return v;
    const double chi_val = radial_field(sys, state, r);
    const double s = theta_factor(state.l, state.m_l, theta);
    const double term = chi_val * chi_val * s * s / (r * r);
    if (form == VelocityForm::Linearized) return v * (1.0 + term / (4.0 * kPi));
    return v * std::sqrt(1.0 + term / (2.0 * kPi));
}

double pf_velocity_2p(const HydrogenSystem& sys, double a_ha, double r, double theta,
                      double theta_dot, PState which) {
    if (!(r > 0.0)) throw DomainError("pf_velocity_2p: r must be positive");
    const double v = r * theta_dot;
    const double decay = a_ha * a_ha * std::exp(-sys.z * r / sys.a0);
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    if (which == PState::P0) return v * (1.0 + 3.0 / (8.0 * kPi) * decay * s * s);
    return v * (1.0 + 3.0 / (16.0 * kPi) * decay * c * c);
}

double Vec3::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

Vec3 spherical_point(double r, double theta, double phi) {
    return {r * std::sin(theta) * std::cos(phi), r * std::sin(theta) * std::sin(phi),
            r * std::cos(theta)};
}

Vec3 orbit_s_state(double r, double theta, double phi) {
    return spherical_point(r, theta, phi);
}

double orbit_2p(const HydrogenSystem& sys, double a_ha, double r, double theta, PState which) {
    if (!(r > 0.0)) throw DomainError("orbit_2p: r must be positive");
    if (a_ha < 0.0) throw DomainError("orbit_2p: amplitude must be non-negative");
    const double decay = a_ha * a_ha * std::exp(-sys.z * r / sys.a0);
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    if (which == PState::P0) return r * (1.0 + decay / (8.0 * kPi) * (1.0 + c * c));
    return r * (1.0 + decay / (16.0 * kPi) * (1.0 + s * s));
}

Diameters orbit_2p_diameters(const HydrogenSystem& sys, double a_ha, double r, PState which) {
    const double axis = orbit_2p(sys, a_ha, r, 0.0, which) / r;
    const double plane = orbit_2p(sys, a_ha, r, 0.5 * kPi, which) / r;
    return {std::max(axis, plane), std::min(axis, plane)};
}

double approximation_gap(double a_ha) {
    if (a_ha < 0.0) throw DomainError("approximation_gap: amplitude must be non-negative");
    // (1 + x/2) - sqrt(1 + x) = (x^2/4) / ((1 + x/2) + sqrt(1 + x)), free of cancellation.
    const double x = 3.0 * a_ha * a_ha / (4.0 * kPi);
    return 0.25 * x * x / ((1.0 + 0.5 * x) + std::sqrt(1.0 + x));
}

Vec3 cartesian_components_2p0(const HydrogenSystem& sys, double a_ha, double r, double theta,
                              double phi) {
    const Vec3 p = spherical_point(r, theta, phi);
    const double eps = a_ha * a_ha * std::exp(-sys.z * r / sys.a0) / (8.0 * kPi);
    const double s2 = std::sin(theta) * std::sin(theta);
    return {p.x * (1.0 + eps * s2), p.y * (1.0 + eps * s2), p.z * (1.0 + eps * (2.0 + s2))};
}

double mean_inverse_radius(const HydrogenSystem& sys, int n, int l,
                           const oracle::QuadratureSpec& spec) {
    require_implemented(n, l);
    // Dimensionless integral of a0 <1/r> over s = r / a0; the density is
    // negligible beyond 80 n^2 a0 / Z.
    const double a0 = sys.a0;
    auto density_over_r = [&](double s) {
        const double r = s * a0;
        const double rf = radial_function(sys, n, l, r);
        return rf * rf * s * a0 * a0 * a0;
    };
    const double upper = 80.0 * n * n / sys.z;
    return oracle::integrate(density_over_r, 0.0, upper, spec) / a0;
}

double mean_particle_energy(const HydrogenSystem& sys, int n, int l,
                            const oracle::QuadratureSpec& spec) {
    return -0.5 * coulomb(sys) * mean_inverse_radius(sys, n, l, spec);
}

double mean_field_energy(const HydrogenSystem& sys, const HState& state,
                         const oracle::QuadratureSpec& spec) {
    return state.e_n - mean_particle_energy(sys, state.n, state.l, spec);
}

}  // namespace pf::hydrogen
