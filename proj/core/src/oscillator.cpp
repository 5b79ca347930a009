#include "pf/oscillator.hpp"

#include <cmath>
#include <string>

#include "pf/error.hpp"
#include "pf/oracle.hpp"

namespace pf::osc {

namespace {

void require_supported_series(const OscMode& mode, const char* where) {
    if (mode.n != 0 && mode.n != 1) {
        throw UnsupportedError(std::string(where) + ": closed forms exist only for n = 0 and n = 1");
    }
}

// q - r, kept separate so that tiny corrections survive.
double series_excess(int n, double amp, double alpha, double r, SeriesOrder order) {
    const double decay = std::exp(-alpha * r * r);
    const double r5 = r * r * r * r * r;
    const double third = alpha * alpha * alpha * amp * amp * r5 * decay;
    if (n == 0) {
        const double aa = alpha * amp;
        const double second = aa * aa * r * r * r * decay / (48.0 * kPi);
        return second + (order == SeriesOrder::ThreeTerm ? third / (120.0 * kPi) : 0.0);
    }
    const double second = alpha * amp * amp * r * decay / (16.0 * kPi);
    return second + (order == SeriesOrder::ThreeTerm ? third / (80.0 * kPi) : 0.0);
}

double series_value(int n, double amp, double alpha, double r, SeriesOrder order) {
    return r + series_excess(n, amp, alpha, r, order);
}

// Physicists' Hermite polynomial by the three-term recurrence.
double hermite(int n, double x) {
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

OscSystem OscSystem::make(double mu, double omega0, double cap_l, double r_eq) {
    OscSystem s{mu, omega0, mu * omega0 / kHbar, cap_l, r_eq};
    s.validate();
    return s;
}

OscSystem OscSystem::from_alpha(double mu, double alpha, double cap_l, double r_eq) {
    if (!(mu > 0.0)) throw DomainError("OscSystem: mu must be positive");
    return make(mu, alpha * kHbar / mu, cap_l, r_eq);
}

void OscSystem::validate() const {
    if (!std::isfinite(mu) || !std::isfinite(omega0) || !std::isfinite(cap_l) ||
        !std::isfinite(r_eq) || !std::isfinite(alpha)) {
        throw ValidationError("OscSystem: non-finite parameter");
    }
    if (!(mu > 0.0) || !(omega0 > 0.0) || !(cap_l > 0.0)) {
        throw DomainError("OscSystem: mu, omega0 and L must be positive");
    }
}

OscMode make_mode(const OscSystem& sys, int n, double amplitude, int l, int m_l) {
    sys.validate();
    if (n < 0) throw DomainError("oscillator: n must be >= 0");
    if (l < 0 || std::abs(m_l) > l) throw DomainError("oscillator: need l >= 0 and |m_l| <= l");
    OscMode mode;
    mode.n = n;
    mode.l = l;
    mode.m_l = m_l;
    mode.a_osc = amplitude;
    mode.e_n = kHbar * sys.omega0 * (n + 0.5);
    mode.e_mu = 0.5 * sys.mu * sys.omega0 * sys.omega0 * sys.cap_l * sys.cap_l;
    mode.e_field = 0.5 * kHbar * sys.omega0 * (2.0 * n + 1.0 - sys.alpha * sys.cap_l * sys.cap_l);
    return mode;
}

EnergyBudget budget(const OscMode& mode) {
    // Evaluated at a turning point: all of E_mu is potential there.
    EnergyBudget b;
    b.e_total = mode.e_n;
    b.e_particle = mode.e_mu;
    b.v_particle = mode.e_mu;
    b.e_field = mode.e_field;
    b.v_field = mode.e_field;
    return b;
}

ClassicalState classical_motion(const OscSystem& sys, double phase, double t) {
    const double arg = sys.omega0 * t + phase;
    return {sys.cap_l * std::cos(arg), -sys.mu * sys.omega0 * sys.cap_l * std::sin(arg)};
}

double kinetic_mu(const OscSystem& sys, double r_bar) {
    const double d = sys.cap_l * sys.cap_l - r_bar * r_bar;
    return d > 0.0 ? 0.5 * sys.mu * sys.omega0 * sys.omega0 * d : 0.0;
}

double classical_threshold(const OscSystem& sys, int n) {
    if (n < 0) throw DomainError("classical_threshold: n must be >= 0");
    return std::sqrt((2.0 * n + 1.0) / sys.alpha);
}

double boundary_suppression(const OscSystem& sys) {
    return std::exp(-sys.alpha * sys.cap_l * sys.cap_l);
}

double radial_field(const OscMode& mode, const OscSystem& sys, double r_bar) {
    const double gauss = std::exp(-0.5 * sys.alpha * r_bar * r_bar);
    switch (mode.n) {
        case 0: return mode.a_osc * gauss;
        case 1: return mode.a_osc * r_bar * gauss;
        default: return mode.a_osc * hermite(mode.n, std::sqrt(sys.alpha) * r_bar) * gauss;
    }
}

double radial_field_derivative(const OscMode& mode, const OscSystem& sys, double r_bar) {
    const double a = sys.alpha;
    const double gauss = std::exp(-0.5 * a * r_bar * r_bar);
    switch (mode.n) {
        case 0: return -a * r_bar * mode.a_osc * gauss;
        case 1: return mode.a_osc * (1.0 - a * r_bar * r_bar) * gauss;
        default: {
            const double s = std::sqrt(a);
            const double xi = s * r_bar;
            return mode.a_osc * s *
                   (2.0 * mode.n * hermite(mode.n - 1, xi) - xi * hermite(mode.n, xi)) * gauss;
        }
    }
}

double ylm_sq(int l, int m, double theta) {
    if (l < 0 || std::abs(m) > l) throw DomainError("ylm_sq: need l >= 0 and |m| <= l");
    const double y = std::sph_legendre(static_cast<unsigned>(l), static_cast<unsigned>(std::abs(m)),
                                       theta);
    return y * y;
}

double kinetic_field(const OscMode& mode, const OscSystem& sys, double r_bar, double theta,
                     double /*phi*/) {
    const double d = radial_field_derivative(mode, sys, r_bar);
    return kinetic_mu(sys, r_bar) * d * d * ylm_sq(mode.l, mode.m_l, theta);
}

double trajectory_gradient_sq(const OscMode& mode, const OscSystem& sys, double r_bar) {
    require_supported_series(mode, "trajectory_gradient_sq");
    const double a = sys.alpha;
    const double decay = std::exp(-a * r_bar * r_bar);
    const double amp2 = mode.a_osc * mode.a_osc;
    if (mode.n == 0) return 0.5 * a * a * amp2 * r_bar * r_bar * decay;
    const double u = 1.0 - a * r_bar * r_bar;
    return 0.5 * a * amp2 * u * u * decay;
}

double trajectory(const OscMode& mode, const OscSystem& sys, double r_bar, SeriesOrder order) {
    require_supported_series(mode, "trajectory");
    if (std::abs(r_bar) > sys.cap_l) throw DomainError("trajectory: |r_bar| exceeds L");
    return series_value(mode.n, mode.a_osc, sys.alpha, r_bar, order);
}

double trajectory_relative_excess(const OscMode& mode, const OscSystem& sys, double r_bar,
                                  SeriesOrder order) {
    require_supported_series(mode, "trajectory_relative_excess");
    if (std::abs(r_bar) > sys.cap_l) throw DomainError("trajectory: |r_bar| exceeds L");
    if (r_bar == 0.0) throw DomainError("trajectory_relative_excess: r_bar must be nonzero");
    return series_excess(mode.n, mode.a_osc, sys.alpha, r_bar, order) / r_bar;
}

double velocity(const OscMode& mode, const OscSystem& sys, double r_bar, double v_mu) {
    return v_mu * (1.0 + trajectory_gradient_sq(mode, sys, r_bar) / (8.0 * kPi));
}

double kinetic_pf_radial(const OscMode& mode, const OscSystem& sys, double r_bar, double k_mu) {
    return k_mu * (1.0 + trajectory_gradient_sq(mode, sys, r_bar) / (4.0 * kPi));
}

double calibrate_excited_amplitude(const OscSystem& sys, double target) {
    sys.validate();
    if (!(target > 1.0)) throw DomainError("calibrate: target ratio must exceed 1");
    const double r = 1.0 / std::sqrt(sys.alpha);
    auto excess = [&](double amp) {
        return series_value(1, amp, sys.alpha, r, SeriesOrder::ThreeTerm) / r - target;
    };
    double hi = r;
    while (excess(hi) < 0.0) hi *= 2.0;
    return oracle::solve_root(excess, 0.0, hi, 1e-15 * hi);
}

double amplitude_estimate(const OscSystem& sys, int n) {
    if (n < 0 || n > 1) throw UnsupportedError("amplitude_estimate: calibration exists for n = 0, 1 only");
    if (std::abs(std::log10(sys.alpha) - 20.0) <= 0.5) return n == 0 ? 1e-9 : 1e-10;
    const double a1 = calibrate_excited_amplitude(sys);
    return n == 0 ? 10.0 * a1 : a1;
}

}  // namespace pf::osc
