#include <cmath>

#include "doctest.h"
#include "pf/boxmode.hpp"
#include "pf/error.hpp"
#include "pf/nonlinear.hpp"
#include "support.hpp"

using namespace pf;
using namespace pf::nonlinear;
using pftest::rel_dev;

namespace {

const box::BoxSystem kSys = box::system_for_ratio(kConstants.electron_mass, 2e-9, 1, 1.5);

// eps giving eps A^2 / k^2 = strength for level n of kSys.
double eps_for_strength(double strength, int n) {
    const double k = box::wavenumber(kSys, n);
    const double amp = box::amplitude(kSys, n);
    return strength * k * k / (amp * amp);
}

double max_duffing_residual(const NonlinearParams& p, double k) {
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double x = kSys.a * i / 200.0;
        worst = std::max(worst, std::abs(duffing_residual(p, k, x)));
    }
    return worst;
}

}  // namespace

TEST_CASE("parameters") {
    const auto p = NonlinearParams::from_coupling(2.0, 4.0, 0.5, 1.0);
    CHECK(p.eps == doctest::Approx(2.0));
    CHECK(p.strength(2.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(NonlinearParams::from_coupling(1.0, 0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(p.require_valid(2.0), ValidityError);
    CHECK_NOTHROW(p.require_valid(10.0));
    CHECK_THROWS_AS(NonlinearParams::from_eps(std::nan(""), 1.0).require_valid(1.0), ValidationError);
}

TEST_CASE("zero coupling reduces to the linear sine mode") {
    const auto p = NonlinearParams::from_eps(0.0, 0.3);
    const double k = 5.0;
    for (double x : {0.0, 0.1, 0.37, 1.0}) {
        CHECK(duffing_solution(p, k, x) == doctest::Approx(0.3 * std::sin(k * x)).epsilon(1e-14));
        CHECK(std::abs(duffing_residual(p, k, x)) < 1e-15);
    }
    CHECK(duffing_solution(p, k, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("duffing residual is second order in the coupling") {
    const double k = box::wavenumber(kSys, 1);
    const double amp = box::amplitude(kSys, 1);
    double prev = 0.0;
    for (double s : {0.04, 0.02, 0.01, 0.005}) {
        const auto p = NonlinearParams::from_eps(eps_for_strength(s, 1), amp);
        const double r = max_duffing_residual(p, k) / amp;
        CHECK(r < s * s);
        if (prev > 0.0) CHECK(std::log2(prev / r) == doctest::Approx(2.0).epsilon(0.05));
        prev = r;
    }
}

TEST_CASE("second derivative agrees with finite differences") {
    const double k = 3.0;
    const auto p = NonlinearParams::from_eps(0.5, 0.4);
    const double h = 1e-4;
    for (double x : {0.2, 0.9, 1.7}) {
        const double fd = (duffing_solution(p, k, x + h) - 2.0 * duffing_solution(p, k, x) + duffing_solution(p, k, x - h)) / (h * h);
        CHECK(duffing_second_derivative_u(p, k, x) == doctest::Approx(fd / (k * k)).epsilon(1e-6));
    }
}

TEST_CASE("cubic field residual") {
    CHECK(cubic_field_residual(2.0, -8.0, 2.0, 0.0) == 0.0);
    CHECK(cubic_field_residual(1.0, 0.0, 1.0, 1.0) == 0.0);
}

TEST_CASE("quantized wavenumber satisfies the quantization condition") {
    for (int n = 1; n <= 4; ++n) {
        for (double s : {-0.05, 0.0, 0.01, 0.08}) {
            const auto p = NonlinearParams::from_eps(eps_for_strength(s, n), box::amplitude(kSys, n));
            const double k = quantized_k(p, kSys, n);
            CHECK(std::abs(quantization_residual(p, kSys, n, k)) < 1e-12 * n * kPi);
            if (s > 0.0) CHECK(k > box::wavenumber(kSys, n));
            if (s < 0.0) CHECK(k < box::wavenumber(kSys, n));
        }
    }
    const auto bad = NonlinearParams::from_eps(eps_for_strength(0.2, 1), box::amplitude(kSys, 1));
    CHECK_THROWS_AS(quantized_k(bad, kSys, 1), ValidityError);
}

TEST_CASE("energy levels") {
    SUBCASE("eps = 0 is the linear box level exactly") {
        for (int n = 1; n <= 6; ++n) {
            const auto lvl = energy_level(0.0, kSys, n);
            const double h = kConstants.planck_h;
            CHECK(rel_dev(lvl.e_n, n * n * h * h / (8.0 * kSys.m * kSys.a * kSys.a)) < 4.0 * 2.2e-16);
            CHECK(lvl.e_n == lvl.e_linear);
            CHECK(lvl.k_n == lvl.k_linear);
        }
    }

    SUBCASE("consistent with the quantized wavenumber") {
        for (int n = 1; n <= 3; ++n) {
            const double eps = eps_for_strength(0.05, n);
            const auto lvl = energy_level(eps, kSys, n);
            const auto p = NonlinearParams::from_eps(eps, lvl.amplitude);
            CHECK(rel_dev(lvl.k_n, quantized_k(p, kSys, n)) < 1e-14);
            CHECK(rel_dev(lvl.e_n, kHbar * kHbar * lvl.k_n * lvl.k_n / (2.0 * kSys.m)) < 1e-13);
            CHECK(energy_levels(p, kSys, n) == lvl.e_n);
            CHECK(lvl.e_n > lvl.e_linear);
        }
    }

    SUBCASE("shift is linear in eps for small coupling") {
        const double e1 = energy_level(eps_for_strength(1e-4, 1), kSys, 1).e_n;
        const double e2 = energy_level(eps_for_strength(2e-4, 1), kSys, 1).e_n;
        const double e0 = energy_level(0.0, kSys, 1).e_n;
        CHECK((e2 - e0) / (e1 - e0) == doctest::Approx(2.0).epsilon(1e-3));
    }

    CHECK(cubic_term_negligibility(NonlinearParams::from_eps(-32.0, 1.0), 1.0) == doctest::Approx(1.0));
}
