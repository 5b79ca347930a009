#include "pf/nonlinear.hpp"

#include <cmath>

#include "pf/error.hpp"

namespace pf::nonlinear {

namespace {

double frequency_shift(const NonlinearParams& p, double k) {
    return 1.0 - 3.0 * p.eps * p.a_tilde * p.a_tilde / (8.0 * k * k);
}

double third_harmonic(const NonlinearParams& p, double k) {
    return p.eps * p.a_tilde * p.a_tilde * p.a_tilde / (32.0 * k * k);
}

// 1 + 3 eps A^2 a^2 / (2 n^2 pi^2)
double discriminant(double eps, double amp, double a, int n) {
    const double npi = n * kPi;
    return 1.0 + 3.0 * eps * amp * amp * a * a / (2.0 * npi * npi);
}

}  // namespace

NonlinearParams NonlinearParams::from_coupling(double eps_prime, double m, double v_p,
                                               double a_tilde) {
    if (!(m > 0.0) || v_p == 0.0) throw DomainError("NonlinearParams: need m > 0 and v_p != 0");
    return {eps_prime, eps_prime / (m * v_p * v_p), a_tilde};
}

NonlinearParams NonlinearParams::from_eps(double eps, double a_tilde) {
    return {0.0, eps, a_tilde};
}

double NonlinearParams::strength(double k) const {
    return eps * a_tilde * a_tilde / (k * k);
}

void NonlinearParams::require_valid(double k) const {
    if (!std::isfinite(eps) || !std::isfinite(a_tilde)) {
        throw ValidationError("NonlinearParams: non-finite parameter");
    }
    if (std::abs(strength(k)) > kValidityThreshold) {
        throw ValidityError("nonlinear: |eps A^2 / k^2| exceeds the first-order validity threshold");
    }
}

double duffing_solution(const NonlinearParams& p, double k, double x, double phase) {
    p.require_valid(k);
    const double theta = frequency_shift(p, k) * k * x + phase;
    return p.a_tilde * std::cos(theta) - third_harmonic(p, k) * std::cos(3.0 * theta);
}

double duffing_second_derivative_u(const NonlinearParams& p, double k, double x, double phase) {
    p.require_valid(k);
    const double w = frequency_shift(p, k);
    const double theta = w * k * x + phase;
    return -w * w * p.a_tilde * std::cos(theta) +
           9.0 * w * w * third_harmonic(p, k) * std::cos(3.0 * theta);
}

double duffing_residual(const NonlinearParams& p, double k, double x, double phase) {
    const double chi = duffing_solution(p, k, x, phase);
    const double chi_uu = duffing_second_derivative_u(p, k, x, phase);
    return chi_uu + chi - p.eps / (k * k) * chi * chi * chi;
}

double cubic_field_residual(double chi, double laplacian, double k, double eps) {
    return laplacian + k * k * chi - eps * chi * chi * chi;
}

double quantized_k(const NonlinearParams& p, const box::BoxSystem& sys, int n) {
    const double k_lin = box::wavenumber(sys, n);
    const double d = discriminant(p.eps, p.a_tilde, sys.a, n);
    if (d < 0.0) throw DomainError("quantized_k: negative discriminant");
    p.require_valid(k_lin);
    return n * kPi / (2.0 * sys.a) * (1.0 + std::sqrt(d));
}

double quantization_residual(const NonlinearParams& p, const box::BoxSystem& sys, int n,
                             double k) {
    return frequency_shift(p, k) * k * sys.a - n * kPi;
}

NonlinearLevel energy_level(double eps, const box::BoxSystem& sys, int n) {
    NonlinearLevel lvl;
    lvl.n = n;
    lvl.amplitude = box::amplitude(sys, n);
    lvl.k_linear = box::wavenumber(sys, n);
    const double p_n = kHbar * lvl.k_linear;
    // Same expression as the linear box level so that eps = 0 reproduces it exactly.
    lvl.e_linear = p_n * p_n / (2.0 * sys.m);

    const NonlinearParams p = NonlinearParams::from_eps(eps, lvl.amplitude);
    const double d = discriminant(eps, lvl.amplitude, sys.a, n);
    if (d < 0.0) throw DomainError("energy_levels: negative discriminant");
    p.require_valid(lvl.k_linear);

    const double bracket = 0.5 + std::sqrt(0.25 * d);
    lvl.k_n = lvl.k_linear * bracket;
    lvl.e_n = lvl.e_linear * bracket * bracket;
    return lvl;
}

double energy_levels(const NonlinearParams& p, const box::BoxSystem& sys, int n) {
    return energy_level(p.eps, sys, n).e_n;
}

double cubic_term_negligibility(const NonlinearParams& p, double k_n) {
    return std::abs(p.eps) * p.a_tilde * p.a_tilde / (32.0 * k_n * k_n);
}

}  // namespace pf::nonlinear
