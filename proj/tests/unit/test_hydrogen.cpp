#include <cmath>

#include "doctest.h"
#include "pf/error.hpp"
#include "pf/hydrogen.hpp"
#include "pf/oracle.hpp"
#include "support.hpp"

using namespace pf;
using namespace pf::hydrogen;
using pftest::rel_dev;

TEST_CASE("circular orbit balances Coulomb and centrifugal forces") {
    const auto sys = HydrogenSystem::make(1);
    CHECK(rel_dev(sys.a0, kConstants.bohr_radius) < 1e-12);
    for (double f : {0.5, 1.0, 4.0}) {
        const double r = f * sys.a0;
        const auto o = circular_orbit(sys, r);
        CHECK(rel_dev(sys.mu * o.v * o.v / r, kConstants.gaussian_charge_sq / (r * r)) < 1e-12);
        CHECK(rel_dev(o.v, r * o.theta_dot) < 1e-14);
        CHECK(rel_dev(o.e_mu, -0.5 * kConstants.gaussian_charge_sq / r) < 1e-12);
        const auto back = orbit_from_theta_dot(sys, o.theta_dot);
        CHECK(rel_dev(back.r, r) < 1e-12);
    }
    CHECK_THROWS_AS(circular_orbit(sys, 0.0), DomainError);
    CHECK_THROWS_AS(HydrogenSystem::make(0), DomainError);
}

TEST_CASE("field energy vanishes at the balance radius") {
    for (int z : {1, 2}) {
        const auto sys = HydrogenSystem::make(z);
        for (int n = 1; n <= 3; ++n) {
            const auto st = make_state(sys, n, 0, 0, 0.1);
            const double rb = balance_radius(sys, n);
            CHECK(rel_dev(rb, n * n * sys.a0 / z) < 1e-14);
            CHECK(std::abs(field_energy(sys, st, rb)) < 1e-12 * std::abs(level_energy(sys, n)));
            CHECK(field_energy(sys, st, 0.5 * rb) > 0.0);
            CHECK(field_energy(sys, st, 2.0 * rb) < 0.0);
            CHECK(rel_dev(level_energy(sys, n), circular_orbit(sys, rb).e_mu) < 1e-12);
        }
    }
}

TEST_CASE("radial functions are normalized") {
    const auto sys = HydrogenSystem::make(1);
    const oracle::QuadratureSpec spec{1e-12, 1e-15, 40};
    for (int n = 1; n <= 3; ++n) {
        for (int l = 0; l < n; ++l) {
            const double a0 = sys.a0;
            const double norm = oracle::integrate(
                [&](double s) {
                    const double r = s * a0;
                    const double rf = radial_function(sys, n, l, r) * std::sqrt(a0 * a0 * a0);
                    return rf * rf * s * s;
                },
                0.0, 60.0 * n, spec);
            CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(radial_function(sys, 4, 0, sys.a0), UnsupportedError);
    CHECK_THROWS_AS(make_state(sys, 2, 2, 0), DomainError);
    CHECK_THROWS_AS(make_state(sys, 2, 1, 2), DomainError);
}

TEST_CASE("mean inverse radius and field energy balance on average") {
    for (int z : {1, 3}) {
        const auto sys = HydrogenSystem::make(z);
        for (int n = 1; n <= 3; ++n) {
            for (int l = 0; l < n; ++l) {
                CHECK(rel_dev(mean_inverse_radius(sys, n, l), z / (n * n * sys.a0)) < 1e-9);
                const auto st = make_state(sys, n, l, 0, 0.1);
                CHECK(std::abs(mean_field_energy(sys, st)) < 1e-9 * std::abs(level_energy(sys, n)));
            }
        }
    }
}

TEST_CASE("2p velocity laws match the general form with swapped angles") {
    const auto sys = HydrogenSystem::make(1);
    const double a_ha = 0.3;
    const double r = 1.7 * sys.a0;
    const double td = circular_orbit(sys, r).theta_dot;
    for (double th : {0.0, 0.4, 1.1, 0.5 * kPi}) {
        const auto p0 = make_state(sys, 2, 1, 0, a_ha);
        const auto p1 = make_state(sys, 2, 1, 1, a_ha);
        // chi/r = A e^{-Zr/2a0} for 2p.
        CHECK(rel_dev(radial_field(sys, p0, r) / r, a_ha * std::exp(-0.5 * r / sys.a0)) < 1e-14);
        CHECK(rel_dev(pf_velocity(sys, p0, r, th, td), pf_velocity_2p(sys, a_ha, r, 0.5 * kPi - th, td, PState::P0)) < 1e-14);
        CHECK(rel_dev(pf_velocity(sys, p1, r, th, td), pf_velocity_2p(sys, a_ha, r, 0.5 * kPi - th, td, PState::PPlusMinus1)) < 1e-14);
        const double lin = pf_velocity(sys, p0, r, th, td, VelocityForm::Linearized);
        const double ex = pf_velocity(sys, p0, r, th, td, VelocityForm::Exact);
        CHECK(lin >= ex);
        CHECK(lin - ex < 1e-2 * lin);
    }
    const auto s1 = make_state(sys, 1, 0, 0, a_ha);
    CHECK(pf_velocity(sys, s1, r, 0.3, td) == doctest::Approx(r * td));
}

TEST_CASE("s-state orbit is the classical sphere") {
    for (double th : {0.1, 1.2, 2.9}) {
        const Vec3 q = orbit_s_state(2e-10, th, 0.7);
        const Vec3 p = spherical_point(2e-10, th, 0.7);
        CHECK(q.x == p.x);
        CHECK(q.y == p.y);
        CHECK(q.z == p.z);
        CHECK(rel_dev(q.norm(), 2e-10) < 1e-14);
    }
}

TEST_CASE("2p orbits") {
    const auto sys = HydrogenSystem::make(1);
    const double r = sys.a0;

    SUBCASE("zero amplitude gives the classical orbit") {
        for (double th : {0.0, 0.8, 1.5}) {
            CHECK(orbit_2p(sys, 0.0, r, th, PState::P0) == r);
            CHECK(orbit_2p(sys, 0.0, r, th, PState::PPlusMinus1) == r);
        }
        CHECK(approximation_gap(0.0) == 0.0);
    }

    SUBCASE("p0 is elongated along the axis, p+-1 in the plane") {
        const double a_ha = 1.0;
        const double eps = std::exp(-1.0) / (8.0 * kPi);
        const auto d0 = orbit_2p_diameters(sys, a_ha, r, PState::P0);
        CHECK(rel_dev(d0.major, 1.0 + 2.0 * eps) < 1e-14);
        CHECK(rel_dev(d0.minor, 1.0 + eps) < 1e-14);
        CHECK(orbit_2p(sys, a_ha, r, 0.0, PState::P0) > orbit_2p(sys, a_ha, r, 0.5 * kPi, PState::P0));
        CHECK(orbit_2p(sys, a_ha, r, 0.0, PState::PPlusMinus1) < orbit_2p(sys, a_ha, r, 0.5 * kPi, PState::PPlusMinus1));
        const auto d1 = orbit_2p_diameters(sys, a_ha, r, PState::PPlusMinus1);
        CHECK(rel_dev(d1.major, 1.0 + eps) < 1e-14);
        CHECK(rel_dev(d1.minor, 1.0 + 0.5 * eps) < 1e-14);
    }

    SUBCASE("cartesian components agree with the orbit on the axis and in the plane") {
        const double a_ha = 0.7;
        const Vec3 pole = cartesian_components_2p0(sys, a_ha, r, 0.0, 0.0);
        CHECK(rel_dev(pole.z, orbit_2p(sys, a_ha, r, 0.0, PState::P0)) < 1e-14);
        const Vec3 eq = cartesian_components_2p0(sys, a_ha, r, 0.5 * kPi, 0.0);
        CHECK(rel_dev(eq.x, orbit_2p(sys, a_ha, r, 0.5 * kPi, PState::P0)) < 1e-14);
    }

    SUBCASE("approximation gap is the expansion remainder") {
        for (double a_ha : {1e-4, 0.01, 0.5, 2.0}) {
            const double x = 3.0 * a_ha * a_ha / (4.0 * kPi);
            const double gap = approximation_gap(a_ha);
            CHECK(gap >= 0.0);
            CHECK(gap <= x * x / 8.0);
            if (a_ha >= 0.5) CHECK(rel_dev(gap, (1.0 + 0.5 * x) - std::sqrt(1.0 + x)) < 1e-10);
        }
        CHECK(approximation_gap(1e-4) > 0.0);
    }
}
