#include "pf/boxmode.hpp"

#include <cmath>
#include <string>

#include "pf/error.hpp"

namespace pf::box {

namespace {

void require_inside(const BoxMode& mode, double x, const char* where) {
    if (!(x >= 0.0 && x <= mode.system.a)) {
        throw DomainError(std::string(where) + ": x outside the box [0, a]");
    }
}

}  // namespace

void BoxSystem::validate() const {
    if (!std::isfinite(m) || !std::isfinite(a) || !std::isfinite(p_particle)) {
        throw ValidationError("BoxSystem: non-finite parameter");
    }
    if (!(m > 0.0) || !(a > 0.0) || !(p_particle > 0.0)) {
        throw DomainError("BoxSystem: m, a and p_particle must be positive");
    }
}

double BoxMode::omega_bar() const {
    return k_n * v_particle();
}

double wavenumber(const BoxSystem& sys, int n) {
    if (n < 1) throw DomainError("box: quantum number n must be >= 1");
    return n * kPi / sys.a;
}

double amplitude(const BoxSystem& sys, int n) {
    sys.validate();
    const double p_n = kHbar * wavenumber(sys, n);
    const double ratio = (sys.p_particle * sys.p_particle) / (p_n * p_n);
    if (ratio > 1.0) throw DomainError("box: superclassical momentum (p_P > p_n)");
    return kHbar / sys.p_particle * std::sqrt(1.0 - ratio);
}

BoxMode make_mode(const BoxSystem& sys, int n) {
    sys.validate();
    BoxMode mode;
    mode.system = sys;
    mode.n = n;
    mode.k_n = wavenumber(sys, n);
    mode.p_n = kHbar * mode.k_n;
    mode.e_n = mode.p_n * mode.p_n / (2.0 * sys.m);

    const double pp2 = sys.p_particle * sys.p_particle;
    const double pn2 = mode.p_n * mode.p_n;
    if (pp2 > pn2) throw DomainError("box: superclassical momentum (p_P > p_n)");
    mode.b_n_sq = pn2 / pp2 - 1.0;
    if (mode.b_n_sq >= 1.0) throw DomainError("box: series divergence (b^2 >= 1)");
    mode.a_n = kHbar / sys.p_particle * std::sqrt(1.0 - pp2 / pn2);
    mode.g_npf = 4.0 * pp2 / (pn2 + 3.0 * pp2);
    return mode;
}

BoxSystem system_for_ratio(double m, double a, int n, double ratio) {
    if (!(ratio > 0.0) || !std::isfinite(ratio)) throw DomainError("box: ratio must be positive");
    BoxSystem sys{m, a, 1.0};
    const double p_n = kHbar * wavenumber(sys, n);
    sys.p_particle = p_n / std::sqrt(ratio);
    sys.validate();
    return sys;
}

EnergyBudget field_energy(const BoxMode& mode, double x) {
    const double m = mode.system.m;
    const double w = mode.omega_bar();
    const double e_field = 0.5 * m * w * w * mode.a_n * mode.a_n;
    const double phase = mode.k_n * x;
    const double c = std::cos(phase);
    const double s = std::sin(phase);

    EnergyBudget b;
    b.e_particle = mode.system.p_particle * mode.system.p_particle / (2.0 * m);
    b.k_particle = b.e_particle;
    b.v_particle = 0.0;
    b.e_field = e_field;
    b.k_field = e_field * c * c;
    b.v_field = e_field * s * s;
    b.e_total = mode.e_n;
    return b;
}

double total_energy_from_amplitude(const BoxMode& mode) {
    const double pp = mode.system.p_particle;
    const double e_p = pp * pp / (2.0 * mode.system.m);
    const double x = pp * mode.a_n / kHbar;
    return e_p / (1.0 - x * x);
}

double chi(const BoxMode& mode, double x) {
    require_inside(mode, x, "chi");
    return mode.a_n * std::sin(mode.k_n * x);
}

double chi_prime(const BoxMode& mode, double x) {
    return mode.a_n * mode.k_n * std::cos(mode.k_n * x);
}

double chi_second(const BoxMode& mode, double x) {
    return -mode.a_n * mode.k_n * mode.k_n * std::sin(mode.k_n * x);
}

double psi(const BoxMode& mode, double x) {
    require_inside(mode, x, "psi");
    return std::sqrt(2.0 / mode.system.a) * std::sin(mode.k_n * x);
}

SeriesCoefficients series_coeffs(double b_sq) {
    if (!std::isfinite(b_sq) || b_sq < 0.0 || b_sq >= 1.0) {
        throw DomainError("series_coeffs: requires 0 <= b^2 < 1");
    }
    const double b2 = b_sq;
    const double b4 = b2 * b2;
    const double b6 = b4 * b2;
    const double b8 = b4 * b4;
    return {
        1.0 + b2 / 4.0 - 3.0 * b4 / 64.0 + 5.0 * b6 / 256.0 - 175.0 * b8 / 16384.0,
        b2 / 8.0 - b4 / 32.0 + 15.0 * b6 / 1024.0 - 35.0 * b8 / 4096.0,
        b4 / 256.0 - 3.0 * b6 / 1024.0 + 35.0 * b8 / 16384.0,
    };
}

double truncated_integrand(double b_sq, double cos_sq) {
    const double c = b_sq * cos_sq;
    return 1.0 + c / 2.0 - c * c / 8.0 + c * c * c / 16.0 - 5.0 * c * c * c * c / 128.0;
}

double exact_integrand(double b_sq, double cos_sq) {
    return std::sqrt(1.0 + b_sq * cos_sq);
}

double sine_coefficient(const BoxMode& mode, TrajectoryVariant variant) {
    switch (variant) {
        case TrajectoryVariant::FirstOrder: {
            const double pp2 = mode.system.p_particle * mode.system.p_particle;
            const double pn2 = mode.p_n * mode.p_n;
            return 0.5 * (pn2 - pp2) / (pn2 + 3.0 * pp2);
        }
        case TrajectoryVariant::Series: {
            const auto c = series_coeffs(mode.b_n_sq);
            return c.b2 / c.b1;
        }
    }
    return 0.0;
}

double trajectory_series(const BoxMode& mode, double x, TrajectoryVariant variant) {
    require_inside(mode, x, "trajectory_series");
    const double k = mode.k_n;
    if (variant == TrajectoryVariant::FirstOrder) {
        return x + sine_coefficient(mode, variant) / k * std::sin(2.0 * k * x);
    }
    const auto c = series_coeffs(mode.b_n_sq);
    return x + c.b2 / (c.b1 * k) * std::sin(2.0 * k * x) -
           c.b3 / (c.b1 * k) * std::sin(4.0 * k * x);
}

double velocity(const BoxMode& mode, double x, double v_p) {
    const double cp = chi_prime(mode, x);
    return mode.g_npf * v_p * std::sqrt(1.0 + cp * cp);
}

double pf_acceleration(const BoxMode& mode, double x, double v_p) {
    const double cp = chi_prime(mode, x);
    const double cs = chi_second(mode, x);
    return mode.g_npf * v_p * v_p * cp * cs / std::sqrt(1.0 + cp * cp);
}

std::vector<double> inflection_points(const BoxMode& mode) {
    std::vector<double> out;
    const int count = 2 * mode.n - 1;
    out.reserve(static_cast<std::size_t>(count));
    for (int j = 1; j <= count; ++j) out.push_back(j * mode.system.a / (2.0 * mode.n));
    return out;
}

double position_at(double v_p, double t, double x0) {
    return v_p * t + x0;
}

std::vector<TrajectorySample> sample_trajectory(const BoxMode& mode, TrajectoryVariant variant,
                                                std::size_t points) {
    if (points < 2) throw DomainError("sample_trajectory: need at least 2 points");
    std::vector<TrajectorySample> out(points);
    const double a = mode.system.a;
    const double step = a / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        // Pin the last abscissa to a so that q(a) = a holds exactly.
        const double x = (i + 1 == points) ? a : static_cast<double>(i) * step;
        out[i] = {x, trajectory_series(mode, x, variant)};
    }
    return out;
}

}  // namespace pf::box
