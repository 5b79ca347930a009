#include <cmath>

#include "doctest.h"
#include "pf/boxmode.hpp"
#include "pf/error.hpp"
#include "pf/timedep.hpp"
#include "support.hpp"

using namespace pf;
using namespace pf::timedep;
using pftest::rel_dev;

namespace {

const box::BoxSystem kSys{kConstants.electron_mass, 2e-9, 0.0};

double period(const Superposition& s) {
    const double b = beat_period(s);
    return b > 0.0 ? b : 2.0 * kPi * kHbar / s.components().front().energy;
}

}  // namespace

TEST_CASE("construction") {
    const auto s = Superposition::equal_weights(kSys, {1, 2, 3});
    CHECK(s.norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.hi() == kSys.a);
    CHECK_THROWS_AS(Superposition::equal_weights(kSys, {}), ValidationError);

    auto comps = s.components();
    comps[0].c *= 2.0;
    CHECK_THROWS_AS(Superposition::make(comps), ValidationError);
    CHECK_NOTHROW(Superposition::make_unnormalized(comps));

    auto mixed = s.components();
    mixed[1].mode.system.a *= 2.0;
    CHECK_THROWS_AS(Superposition::make(mixed), ValidationError);
}

TEST_CASE("single mode is stationary with zero flux") {
    const auto s = Superposition::equal_weights(kSys, {2});
    const double t = 0.37 * period(s);
    CHECK(beat_period(s) == 0.0);
    const double j_scale = kHbar / kSys.m * (2.0 / kSys.a) * box::wavenumber(kSys, 2);
    for (double f : {0.1, 0.25, 0.6}) {
        const double x = f * kSys.a;
        CHECK(std::abs(flux(s, x, t)) < 1e-14 * j_scale);
        CHECK(rel_dev(density(s, x, t), density(s, x, 0.0)) < 1e-13);
    }
    CHECK(std::abs(integrated_flux(s, t)) < 1e-14 * j_scale * kSys.a);
    CHECK(std::abs(expectation_p(s, t)) < 1e-14 * kHbar / kSys.a);
    const double pn = kHbar * box::wavenumber(kSys, 2);
    CHECK(rel_dev(expectation_p2(s, t).real(), pn * pn) < 1e-12);
}

TEST_CASE("total probability is conserved") {
    const auto s = Superposition::equal_weights(kSys, {1, 2, 5});
    const double tb = beat_period(s);
    for (double f : {0.0, 0.13, 0.5, 0.91}) {
        CHECK(total_probability(s, f * tb) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("continuity equation holds for a superposition") {
    const auto s = Superposition::equal_weights(kSys, {1, 2});
    const double tb = beat_period(s);
    const double t = 0.3 * tb;
    const double x = 0.37 * kSys.a;

    const auto coarse = continuity_terms(s, x, t, kSys.a / 100.0, tb / 100.0);
    const auto fine = continuity_terms(s, x, t, kSys.a / 200.0, tb / 200.0);
    const double scale = std::abs(fine.d_rho_dt);
    CHECK(scale > 0.0);
    CHECK(std::abs(fine.residual) < 1e-2 * scale);
    CHECK(std::abs(coarse.residual / fine.residual) == doctest::Approx(4.0).epsilon(0.05));

    const auto tight = continuity_terms(s, x, t, kSys.a * 1e-4, tb * 1e-4);
    CHECK(std::abs(tight.residual) < 1e-6 * std::abs(tight.d_rho_dt));

    CHECK_THROWS_AS(continuity_residual(s, 0.0, t, 1e-12, 1e-18), DomainError);
    CHECK_THROWS_AS(continuity_residual(s, x, t, 0.0, 1e-18), DomainError);
}

TEST_CASE("analytic time derivative matches finite differences") {
    const auto s = Superposition::equal_weights(kSys, {1, 3});
    const double tb = beat_period(s);
    const double h = tb * 1e-5;
    const double x = 0.21 * kSys.a;
    const double t = 0.4 * tb;
    const Complex fd = (s.value(x, t + h) - s.value(x, t - h)) / (2.0 * h);
    CHECK(std::abs(fd - s.dt(x, t)) < 1e-6 * std::abs(s.dt(x, t)));
    CHECK(std::abs(tdse_residual(s, x, t)) < 1e-12 * tdse_scale(s, x));
}

TEST_CASE("plane wave flux is hbar k / m times the density") {
    const PlaneWave w{3e9, kConstants.electron_mass, 0.5, 0.0, 1e-9};
    for (double x : {1e-10, 5e-10}) {
        CHECK(rel_dev(flux(w, x, 1e-16), kHbar * w.k / w.m * 0.25) < 1e-14);
        CHECK(rel_dev(density(w, x, 0.0), 0.25) < 1e-14);
    }
    const double omega = kHbar * w.k * w.k / (2.0 * w.m);
    CHECK(std::abs(continuity_residual(w, 5e-10, 0.0, 1e-3 / w.k, 1e-3 / omega)) < 1e-9 * 0.25 * omega);
}

TEST_CASE("expectation values of an equal two-level superposition") {
    const auto s = Superposition::equal_weights(kSys, {1, 2});
    const double tb = beat_period(s);
    const double p1 = kHbar * box::wavenumber(kSys, 1);
    const double p2 = kHbar * box::wavenumber(kSys, 2);
    for (double f : {0.0, 0.2, 0.7}) {
        const double t = f * tb;
        CHECK(std::abs(expectation_p(s, t).imag()) < 1e-12 * p1);
        CHECK(rel_dev(expectation_p2(s, t).real(), 0.5 * (p1 * p1 + p2 * p2)) < 1e-12);
    }
    // <p> oscillates at the beat frequency with mean zero.
    CHECK(std::abs(expectation_p(s, 0.25 * tb).real()) > 1e-3 * p1);
    CHECK(std::abs(expectation_p(s, 0.25 * tb).real() + expectation_p(s, 0.75 * tb).real()) < 1e-10 * p1);
}
