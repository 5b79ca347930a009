#include <cmath>
#include <limits>

#include "doctest.h"
#include "pf/boxmode.hpp"
#include "pf/core.hpp"
#include "pf/error.hpp"
#include "pf/oracle.hpp"
#include "support.hpp"

using namespace pf;
using pftest::rel_dev;

TEST_CASE("constants are mutually consistent") {
    constexpr auto c = codata();
    CHECK(rel_dev(c.planck_h, 2.0 * kPi * c.hbar) < 1e-15);
    CHECK(std::abs(c.bohr_radius / 0.52918e-10 - 1.0) < 1e-4);
    CHECK(rel_dev(c.bohr_radius, c.hbar * c.hbar / (c.electron_mass * c.gaussian_charge_sq)) < 1e-15);
}

TEST_CASE("de Broglie triple") {
    const auto d = DeBroglie::from_momentum(3.2e-24);
    CHECK(rel_dev(d.p, kHbar * d.k) < 1e-15);
    CHECK(rel_dev(d.lambda, kConstants.planck_h / d.p) < 1e-15);
    const auto e = DeBroglie::from_wavenumber(d.k);
    CHECK(rel_dev(e.p, d.p) < 1e-15);
    CHECK_THROWS_AS(DeBroglie::from_momentum(0.0), DomainError);
}

TEST_CASE("energy budget check") {
    SUBCASE("consistent splits") {
        EnergyBudget b{2.0, 1.5, 0.5, 1.0, 0.5, 0.2, 0.3};
        CHECK(energy_budget_check(b));
    }
    SUBCASE("broken additivity") {
        EnergyBudget b{1.0, 1.0, 0.1, 1.0, 0.0, 0.1, 0.0};
        CHECK_FALSE(energy_budget_check(b));
    }
    SUBCASE("negative kinetic field energy") {
        EnergyBudget b{1.0, 1.0, 0.0, 1.0, 0.0, -0.1, 0.1};
        CHECK_FALSE(energy_budget_check(b));
    }
    SUBCASE("non-finite input") {
        EnergyBudget b{std::numeric_limits<double>::quiet_NaN(), 1.0, 0.0, 1.0, 0.0, 0.0, 0.0};
        CHECK_THROWS_AS(energy_budget_check(b), ValidationError);
    }
    SUBCASE("box mode budgets along the box") {
        for (int n = 1; n <= 4; ++n) {
            const auto mode = box::make_mode(box::system_for_ratio(kConstants.electron_mass, 2e-9, n, 1.5), n);
            for (double f : {0.0, 0.13, 0.25, 0.5, 0.77}) {
                CHECK(energy_budget_check(box::field_energy(mode, f * mode.system.a)));
            }
        }
    }
}

TEST_CASE("region classification") {
    CHECK(classify_region(-2.0, 1.0, 1e-30) == RegionClass::Forbidden);
    CHECK(classify_region(0.0, 1.0, 1e-30) == RegionClass::ClassicalLimit);
    CHECK(classify_region(-1.0, 3.0, 1e-30) == RegionClass::Allowed);
    CHECK(classify_region(-1e-9, 0.0, 1e-6) == RegionClass::Forbidden);
    CHECK_THROWS_AS(classify_region(0.0, 1.0, 0.0), DomainError);
    CHECK(default_classical_eps(-4.0) == doctest::Approx(4e-6));

    int counts[3] = {0, 0, 0};
    for (int i = -20; i <= 20; ++i) {
        for (int j = 0; j <= 20; ++j) {
            const auto r = classify_region(0.1 * i, 0.1 * j, 0.05);
            ++counts[static_cast<int>(r)];
        }
    }
    CHECK(counts[0] + counts[1] + counts[2] == 41 * 21);
    CHECK(counts[0] > 0);
    CHECK(counts[1] > 0);
    CHECK(counts[2] > 0);
}

TEST_CASE("kinetic PF energy") {
    CHECK(kinetic_pf(1.0, 0.0, 1.0) == 1.0);
    CHECK(kinetic_pf(0.0, 7.0, 1.0) == 0.0);
    CHECK(kinetic_pf(2.0, 0.5, 1.0) == doctest::Approx(3.0));
    double prev = -1.0;
    for (int i = 0; i < 50; ++i) {
        const double k = kinetic_pf(1.0, 0.1 * i, 0.9);
        CHECK(k >= prev);
        prev = k;
    }
    CHECK_THROWS_AS(kinetic_pf(-1.0, 0.0, 1.0), DomainError);
}

TEST_CASE("field force of a real stationary field equals the oscillating form") {
    const double m = kConstants.electron_mass;
    const double v = 3e5;
    const double k = 2.1e9;
    const double amp = 0.4e-9;
    const double f_p = 2.5e-12;
    CHECK(field_force_1d(m, v, 0.7, 0.0, 0.0) == 0.0);
    for (int i = 1; i < 200; ++i) {
        const double x = i * 1e-12;
        const double cp = amp * k * std::cos(k * x);
        // d|chi'|/dx by central differences of |chi'|
        const double d_abs = oracle::finite_diff(
            [&](double s) { return std::abs(amp * k * std::cos(k * s)); }, x, 1e-17, 1);
        if (cp <= 0.0) continue;  // the identity holds where chi' > 0
        const double f1 = field_force_1d(m, v, cp, d_abs, f_p);
        const double f2 = field_force_stationary(m, v, k, amp * std::sin(k * x), cp, f_p);
        CHECK(std::abs(f1 - f2) <= 1e-6 * (std::abs(m * v * v * k * k * amp) + std::abs(f_p * amp * k)));
    }
}

TEST_CASE("PF force in stationary states") {
    CHECK(pf_force_stationary(0.8, 3.0, 0.0, 5.0, 1.0, 2.0) == doctest::Approx(2.4));
    CHECK(pf_force_stationary(0.8, 0.0, 0.5, 0.0, 1.0, 2.0) == 0.0);
}
