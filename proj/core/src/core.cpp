#include "pf/core.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "pf/error.hpp"

namespace pf {

namespace {

bool close_rel(double lhs, double rhs, double rel_tol) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs)});
    return std::abs(lhs - rhs) <= rel_tol * scale;
}

void require_finite(std::initializer_list<double> values, const char* where) {
    for (double v : values) {
        if (!std::isfinite(v)) throw ValidationError(std::string(where) + ": non-finite input");
    }
}

}  // namespace

DeBroglie DeBroglie::from_momentum(double p) {
    if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("de Broglie: momentum must be positive");
    return DeBroglie{p, p / kHbar, kConstants.planck_h / p};
}

DeBroglie DeBroglie::from_wavenumber(double k) {
    if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("de Broglie: wavenumber must be positive");
    const double p = kHbar * k;
    return DeBroglie{p, k, kConstants.planck_h / p};
}

bool energy_budget_check(const EnergyBudget& b, double rel_tol) {
    require_finite({b.e_total, b.e_particle, b.e_field, b.k_particle, b.v_particle, b.k_field,
                    b.v_field},
                   "energy_budget_check");
    // Splits are compared against the magnitude of the whole budget, so a
    // vanishing part (E_F -> 0) does not demand exact cancellation.
    const double scale =
        std::max({std::abs(b.e_total), std::abs(b.e_particle), std::abs(b.e_field)});
    auto close = [&](double lhs, double rhs) {
        return std::abs(lhs - rhs) <= rel_tol * std::max(scale, std::max(std::abs(lhs), std::abs(rhs)));
    };
    return close_rel(b.e_total, b.e_particle + b.e_field, rel_tol) &&
           close(b.e_particle, b.k_particle + b.v_particle) &&
           close(b.e_field, b.k_field + b.v_field) && b.k_particle >= 0.0 && b.k_field >= 0.0;
}

std::string_view to_string(RegionClass r) {
    switch (r) {
        case RegionClass::Allowed: return "allowed";
        case RegionClass::Forbidden: return "forbidden";
        case RegionClass::ClassicalLimit: return "classical-limit";
    }
    return "unknown";
}

RegionClass classify_region(double e_field, double k_particle, double eps) {
    require_finite({e_field, k_particle, eps}, "classify_region");
    if (!(eps > 0.0)) throw DomainError("classify_region: eps must be positive");
    if (e_field + k_particle < 0.0) return RegionClass::Forbidden;
    if (std::abs(e_field) <= eps) return RegionClass::ClassicalLimit;
    return RegionClass::Allowed;
}

double default_classical_eps(double e_particle) {
    return 1e-6 * std::abs(e_particle);
}

double field_force_1d(double m, double v_p, double chi_prime, double d_abs_chi_prime_dx,
                      double f_p) {
    if (!(m > 0.0)) throw DomainError("field_force_1d: mass must be positive");
    return m * v_p * v_p * d_abs_chi_prime_dx + f_p * std::abs(chi_prime);
}

double field_force_stationary(double m, double v_p, double k, double chi, double chi_prime,
                              double f_p) {
    if (!(m > 0.0)) throw DomainError("field_force_stationary: mass must be positive");
    const double omega_bar_sq = v_p * v_p * k * k;
    return -m * omega_bar_sq * chi + f_p * chi_prime;
}

double kinetic_pf(double k_particle, double chi_prime_sq, double g) {
    if (k_particle < 0.0 || chi_prime_sq < 0.0 || !(g > 0.0)) {
        throw DomainError("kinetic_pf: requires k_particle >= 0, chi'^2 >= 0, g > 0");
    }
    return g * g * k_particle * (1.0 + chi_prime_sq);
}

double pf_force_stationary(double g, double f_p, double chi_prime, double chi_second, double m,
                           double v) {
    if (!(m > 0.0)) throw DomainError("pf_force_stationary: mass must be positive");
    const double root = std::sqrt(1.0 + chi_prime * chi_prime);
    return g * (f_p * root + m * v * v * chi_prime * chi_second / root);
}

}  // namespace pf
