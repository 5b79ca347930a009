#pragma once

// Probability density, flux and expectation values for superpositions of
// box eigenmodes. Field derivatives are analytic mode by mode; the only
// numerical differentiation lives in continuity_residual, which exists to
// cross-check the analytic flux.

#include <complex>
#include <concepts>
#include <vector>

#include "pf/boxmode.hpp"

namespace pf::timedep {

using Complex = std::complex<double>;

// A twice-differentiable complex field on [lo(), hi()] for a particle of
// mass mass().
template <typename F>
concept WaveField = requires(const F& f, double x, double t) {
    { f.value(x, t) } -> std::convertible_to<Complex>;
    { f.dx(x, t) } -> std::convertible_to<Complex>;
    { f.dxx(x, t) } -> std::convertible_to<Complex>;
    { f.mass() } -> std::convertible_to<double>;
    { f.lo() } -> std::convertible_to<double>;
    { f.hi() } -> std::convertible_to<double>;
};

struct Component {
    box::BoxMode mode;
    Complex c;
    double energy;  // J, defaults to the mode eigenvalue
};

class Superposition {
public:
    // Requires sum |c_j|^2 = 1 to 1e-12 and modes sharing one box.
    static Superposition make(std::vector<Component> components);
    // Same checks except normalization.
    static Superposition make_unnormalized(std::vector<Component> components);
    // Equal-weight, real-coefficient superposition of the given levels.
    static Superposition equal_weights(const box::BoxSystem& sys, const std::vector<int>& levels);

    Complex value(double x, double t) const;
    Complex dx(double x, double t) const;
    Complex dxx(double x, double t) const;
    Complex dt(double x, double t) const;

    double mass() const { return components_.front().mode.system.m; }
    double lo() const { return 0.0; }
    double hi() const { return components_.front().mode.system.a; }

    const std::vector<Component>& components() const { return components_; }
    double norm_sq() const;

private:
    explicit Superposition(std::vector<Component> components);
    std::vector<Component> components_;
};

// Free-particle plane wave A e^{i(kx - wt)} on [lo, hi], hbar w = hbar^2 k^2 / 2m.
struct PlaneWave {
    double k;
    double m;
    double amplitude = 1.0;
    double x_lo = 0.0;
    double x_hi = 1.0;

    Complex value(double x, double t) const;
    Complex dx(double x, double t) const;
    Complex dxx(double x, double t) const;
    double mass() const { return m; }
    double lo() const { return x_lo; }
    double hi() const { return x_hi; }
};

template <WaveField F>
double density(const F& f, double x, double t) {
    return std::norm(f.value(x, t));
}

// (-i hbar / 2m) [Psi* dPsi/dx - Psi dPsi*/dx] = (hbar/m) Im(Psi* dPsi/dx)
template <WaveField F>
double flux(const F& f, double x, double t) {
    const Complex psi = f.value(x, t);
    const Complex d = f.dx(x, t);
    return kHbar / f.mass() * std::imag(std::conj(psi) * d);
}

struct ContinuityTerms {
    double d_rho_dt;
    double d_j_dx;
    double residual;
};

// Central-difference estimates of d rho/dt and dj/dx; the residual is their
// sum and falls off as O(h^2). Throws DomainError unless x - h_x and x + h_x
// are inside the field's domain.
template <WaveField F>
ContinuityTerms continuity_terms(const F& f, double x, double t, double h_x, double h_t);

template <WaveField F>
double continuity_residual(const F& f, double x, double t, double h_x, double h_t) {
    return continuity_terms(f, x, t, h_x, h_t).residual;
}

struct QuadratureOptions {
    int panels = 64;
};

// Composite 20-point Gauss-Legendre over the box.
Complex expectation_p(const Superposition& s, double t, const QuadratureOptions& q = {});
Complex expectation_p2(const Superposition& s, double t, const QuadratureOptions& q = {});
double total_probability(const Superposition& s, double t, const QuadratureOptions& q = {});
double integrated_flux(const Superposition& s, double t, const QuadratureOptions& q = {});

// i hbar dPsi/dt + (hbar^2/2m) d^2Psi/dx^2 - V Psi with V = 0 inside the box.
Complex tdse_residual(const Superposition& s, double x, double t);
// sum_j |c_j| E_j |psi_j(x)|, the magnitude the residual is compared against.
double tdse_scale(const Superposition& s, double x);

// Period of the slowest beat, 2 pi hbar / min |E_i - E_j|. Zero for a
// single-level state.
double beat_period(const Superposition& s);

}  // namespace pf::timedep

#include "pf/timedep_impl.hpp"
