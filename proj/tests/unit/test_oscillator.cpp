#include <cmath>

#include "doctest.h"
#include "pf/error.hpp"
#include "pf/oracle.hpp"
#include "pf/oscillator.hpp"
#include "pf/trajectory_oracle.hpp"
#include "support.hpp"

using namespace pf;
using namespace pf::osc;
using pftest::rel_dev;

namespace {

OscSystem h2(double cap_l) {
    return OscSystem::from_alpha(kHydrogenMoleculeMu, 1e20, cap_l);
}

double threshold_50() {
    return classical_threshold(h2(1e-9), 50);
}

}  // namespace

TEST_CASE("system construction") {
    const auto s = h2(1e-9);
    CHECK(s.alpha == doctest::Approx(1e20).epsilon(1e-14));
    CHECK_THROWS_AS(OscSystem::make(kHydrogenMoleculeMu, -1.0, 1e-9), DomainError);
    CHECK_THROWS_AS(OscSystem::make(kHydrogenMoleculeMu, 1e14, std::nan("")), ValidationError);
    CHECK_THROWS_AS(make_mode(s, -1, 1e-10), DomainError);
    CHECK_THROWS_AS(make_mode(s, 1, 1e-10, 1, 2), DomainError);
}

TEST_CASE("classical threshold and boundary suppression") {
    const double l = threshold_50();
    CHECK(l == doctest::Approx(1.005e-9).epsilon(5e-3));
    const double supp = boundary_suppression(h2(l));
    CHECK(supp == doctest::Approx(std::exp(-101.0)).epsilon(1e-12));
    CHECK(supp > 0.5e-44);
    CHECK(supp < 2e-44);
}

TEST_CASE("field energy vanishes at the threshold amplitude") {
    for (int n : {0, 1, 5, 50}) {
        const double l = classical_threshold(h2(1e-9), n);
        const auto mode = make_mode(h2(l), n, 1e-10);
        CHECK(std::abs(mode.e_field) <= 1e-12 * mode.e_n);
        CHECK(classify_region(mode.e_field, 0.0, default_classical_eps(mode.e_mu)) == RegionClass::ClassicalLimit);
        CHECK(energy_budget_check(budget(mode)));
    }
    // Beyond the threshold the field energy is negative.
    const auto wide = make_mode(h2(2.0 * threshold_50()), 50, 1e-10);
    CHECK(wide.e_field < 0.0);
    CHECK(energy_budget_check(budget(wide)));
}

TEST_CASE("classical motion conserves the particle energy") {
    const auto s = h2(0.8e-9);
    const auto mode = make_mode(s, 3, 1e-10);
    const double period = 2.0 * kPi / s.omega0;
    for (int i = 0; i < 16; ++i) {
        const auto st = classical_motion(s, 0.3, period * i / 16.0);
        const double e = st.p_mu * st.p_mu / (2.0 * s.mu) + 0.5 * s.mu * s.omega0 * s.omega0 * st.r_bar * st.r_bar;
        CHECK(rel_dev(e, mode.e_mu) < 1e-12);
        CHECK(rel_dev(kinetic_mu(s, st.r_bar), st.p_mu * st.p_mu / (2.0 * s.mu)) < 1e-9);
    }
    CHECK(kinetic_mu(s, 2.0 * s.cap_l) == 0.0);
}

TEST_CASE("radial field derivatives agree with finite differences") {
    const auto s = h2(1e-9);
    for (int n : {0, 1, 2, 3, 6}) {
        const auto mode = make_mode(s, n, 1e-10);
        for (double r : {-3e-10, -1e-11, 0.4e-10, 1.3e-10, 2.2e-10}) {
            const double fd = oracle::finite_diff([&](double x) { return radial_field(mode, s, x); }, r, 1e-15, 1);
            CHECK(std::abs(radial_field_derivative(mode, s, r) - fd) <= 1e-7 * (1e-10 * std::sqrt(s.alpha) * std::pow(2.0, n) * 10.0));
        }
    }
    // Hermite extension at n = 2: A (4 alpha r^2 - 2) exp(-alpha r^2 / 2).
    const auto m2 = make_mode(s, 2, 1e-10);
    const double r = 0.7e-10;
    CHECK(rel_dev(radial_field(m2, s, r), 1e-10 * (4.0 * s.alpha * r * r - 2.0) * std::exp(-0.5 * s.alpha * r * r)) < 1e-14);
}

TEST_CASE("spherical harmonic densities are normalized") {
    for (int l = 0; l <= 3; ++l) {
        for (int m = -l; m <= l; ++m) {
            const double norm = 2.0 * kPi * oracle::integrate([&](double th) { return ylm_sq(l, m, th) * std::sin(th); }, 0.0, kPi);
            CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
    const auto s = h2(1e-9);
    const auto mode = make_mode(s, 1, 1e-10, 1, 0);
    CHECK(kinetic_field(mode, s, 0.3e-10, 0.4, 0.0) >= 0.0);
}

TEST_CASE("excited trajectory near the origin") {
    const auto s = h2(threshold_50());
    const auto mode = make_mode(s, 1, 1e-10);
    const double r1 = 1.0 / std::sqrt(s.alpha);
    const double q = trajectory(mode, s, r1, SeriesOrder::ThreeTerm) * std::sqrt(s.alpha);
    CHECK(q == doctest::Approx(1.0088).epsilon(2e-3));
    const double exact = oracle::exact_osc_trajectory(mode, s, r1) * std::sqrt(s.alpha);
    CHECK(rel_dev(q, exact) < 2e-3);
    CHECK(trajectory_relative_excess(mode, s, s.cap_l, SeriesOrder::ThreeTerm) < 1e-20);
    CHECK(trajectory(mode, s, -r1, SeriesOrder::TwoTerm) == doctest::Approx(-trajectory(mode, s, r1, SeriesOrder::TwoTerm)));
    CHECK_THROWS_AS(trajectory(mode, s, 1.01 * s.cap_l, SeriesOrder::TwoTerm), DomainError);
    CHECK_THROWS_AS(trajectory(make_mode(s, 2, 1e-10), s, r1, SeriesOrder::TwoTerm), UnsupportedError);
}

TEST_CASE("ground-state trajectory agrees with quadrature near the origin") {
    const auto s = h2(threshold_50());
    const auto mode = make_mode(s, 0, 1e-9);
    double prev = 0.0;
    for (double f : {0.05, 0.1, 0.2, 0.6}) {
        const double r = f / std::sqrt(s.alpha);
        const double dev = rel_dev(trajectory(mode, s, r, SeriesOrder::ThreeTerm), oracle::exact_osc_trajectory(mode, s, r));
        if (f <= 0.2) CHECK(dev < 1e-3);
        // The expansion degrades away from the origin.
        CHECK(dev > prev);
        prev = dev;
    }
}

TEST_CASE("velocity is the slope of the two-term series at the origin") {
    const auto s = h2(threshold_50());
    for (int n : {0, 1}) {
        const auto mode = make_mode(s, n, n == 0 ? 1e-9 : 1e-10);
        const double h = 1e-4 / std::sqrt(s.alpha);
        const double slope = oracle::finite_diff([&](double r) { return trajectory(mode, s, r, SeriesOrder::TwoTerm); }, 0.0, h, 1);
        CHECK(slope == doctest::Approx(velocity(mode, s, 0.0, 1.0)).epsilon(1e-7));
        const double g = trajectory_gradient_sq(mode, s, 0.2e-10);
        CHECK(kinetic_pf_radial(mode, s, 0.2e-10, 2.0) == doctest::Approx(2.0 * (1.0 + g / (4.0 * kPi))));
    }
}

TEST_CASE("amplitude calibration") {
    const auto s = h2(threshold_50());
    const double a1 = calibrate_excited_amplitude(s);
    const auto mode = make_mode(s, 1, a1);
    const double r1 = 1.0 / std::sqrt(s.alpha);
    CHECK(trajectory(mode, s, r1, SeriesOrder::ThreeTerm) / r1 == doctest::Approx(1.01).epsilon(1e-12));
    CHECK(a1 == doctest::Approx(1.067e-10).epsilon(2e-3));
    CHECK(amplitude_estimate(s, 1) == 1e-10);
    CHECK(amplitude_estimate(s, 0) == 1e-9);

    const auto other = OscSystem::from_alpha(kHydrogenMoleculeMu, 1e18, 1e-8);
    const double c1 = amplitude_estimate(other, 1);
    CHECK(c1 == doctest::Approx(calibrate_excited_amplitude(other)));
    CHECK(amplitude_estimate(other, 0) == doctest::Approx(10.0 * c1));
    CHECK_THROWS_AS(amplitude_estimate(other, 2), UnsupportedError);
    CHECK_THROWS_AS(calibrate_excited_amplitude(other, 0.99), DomainError);
}
