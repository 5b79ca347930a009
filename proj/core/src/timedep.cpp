#include "pf/timedep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include <boost/math/quadrature/gauss.hpp>

#include "pf/error.hpp"

namespace pf::timedep {

namespace {

constexpr double kNormTol = 1e-12;

struct ModeTerms {
    double s;
    double c;
    double k;
    double norm;
};

ModeTerms mode_terms(const box::BoxMode& mode, double x) {
    const double a = mode.system.a;
    const double k = mode.k_n;
    return {std::sin(k * x), std::cos(k * x), k, std::sqrt(2.0 / a)};
}

Complex phase(const Component& c, double t) {
    return c.c * std::polar(1.0, -c.energy * t / kHbar);
}

void check_components(const std::vector<Component>& comps) {
    if (comps.empty()) throw ValidationError("Superposition: at least one mode is required");
    const auto& ref = comps.front().mode.system;
    for (const auto& c : comps) {
        if (c.mode.system.a != ref.a || c.mode.system.m != ref.m) {
            throw ValidationError("Superposition: all modes must share one box");
        }
        if (!std::isfinite(c.c.real()) || !std::isfinite(c.c.imag()) || !std::isfinite(c.energy)) {
            throw ValidationError("Superposition: non-finite coefficient or energy");
        }
    }
}

// Composite Gauss-Legendre over [0, a]; f returns a complex value.
template <typename F>
Complex integrate_box(double a, int panels, F&& f) {
    if (panels < 1) throw DomainError("quadrature: panels must be >= 1");
    using Rule = boost::math::quadrature::gauss<double, 20>;
    const double h = a / panels;
    Complex sum = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double lo = i * h;
        const double hi = (i + 1 == panels) ? a : lo + h;
        const double re = Rule::integrate([&](double x) { return f(x).real(); }, lo, hi);
        const double im = Rule::integrate([&](double x) { return f(x).imag(); }, lo, hi);
        sum += Complex(re, im);
    }
    return sum;
}

}  // namespace

Superposition::Superposition(std::vector<Component> components)
    : components_(std::move(components)) {}

Superposition Superposition::make(std::vector<Component> components) {
    Superposition s = make_unnormalized(std::move(components));
    if (std::abs(s.norm_sq() - 1.0) > kNormTol) {
        throw ValidationError("Superposition: coefficients must satisfy sum |c|^2 = 1");
    }
    return s;
}

Superposition Superposition::make_unnormalized(std::vector<Component> components) {
    check_components(components);
    return Superposition(std::move(components));
}

Superposition Superposition::equal_weights(const box::BoxSystem& sys,
                                           const std::vector<int>& levels) {
    if (levels.empty()) throw ValidationError("Superposition: at least one mode is required");
    const double c = 1.0 / std::sqrt(static_cast<double>(levels.size()));
    std::vector<Component> comps;
    comps.reserve(levels.size());
    for (int n : levels) {
        // Only the eigenfunction and eigenvalue matter here.
        box::BoxMode m;
        m.system = sys;
        m.n = n;
        m.k_n = box::wavenumber(sys, n);
        m.p_n = kHbar * m.k_n;
        m.e_n = m.p_n * m.p_n / (2.0 * sys.m);
        comps.push_back({m, Complex(c, 0.0), m.e_n});
    }
    return make(std::move(comps));
}

double Superposition::norm_sq() const {
    double s = 0.0;
    for (const auto& c : components_) s += std::norm(c.c);
    return s;
}

Complex Superposition::value(double x, double t) const {
    Complex sum = 0.0;
    for (const auto& c : components_) {
        const ModeTerms m = mode_terms(c.mode, x);
        sum += phase(c, t) * (m.norm * m.s);
    }
    return sum;
}

Complex Superposition::dx(double x, double t) const {
    Complex sum = 0.0;
    for (const auto& c : components_) {
        const ModeTerms m = mode_terms(c.mode, x);
        sum += phase(c, t) * (m.norm * m.k * m.c);
    }
    return sum;
}

Complex Superposition::dxx(double x, double t) const {
    Complex sum = 0.0;
    for (const auto& c : components_) {
        const ModeTerms m = mode_terms(c.mode, x);
        sum += phase(c, t) * (-m.norm * m.k * m.k * m.s);
    }
    return sum;
}

Complex Superposition::dt(double x, double t) const {
    const Complex minus_i(0.0, -1.0);
    Complex sum = 0.0;
    for (const auto& c : components_) {
        const ModeTerms m = mode_terms(c.mode, x);
        sum += minus_i * (c.energy / kHbar) * phase(c, t) * (m.norm * m.s);
    }
    return sum;
}

Complex PlaneWave::value(double x, double t) const {
    const double w = kHbar * k * k / (2.0 * m);
    return amplitude * std::polar(1.0, k * x - w * t);
}

Complex PlaneWave::dx(double x, double t) const {
    return Complex(0.0, k) * value(x, t);
}

Complex PlaneWave::dxx(double x, double t) const {
    return -k * k * value(x, t);
}

Complex expectation_p(const Superposition& s, double t, const QuadratureOptions& q) {
    const Complex minus_i_hbar(0.0, -kHbar);
    return minus_i_hbar * integrate_box(s.hi(), q.panels, [&](double x) {
               return std::conj(s.value(x, t)) * s.dx(x, t);
           });
}

Complex expectation_p2(const Superposition& s, double t, const QuadratureOptions& q) {
    return -kHbar * kHbar * integrate_box(s.hi(), q.panels, [&](double x) {
               return std::conj(s.value(x, t)) * s.dxx(x, t);
           });
}

double total_probability(const Superposition& s, double t, const QuadratureOptions& q) {
    return integrate_box(s.hi(), q.panels, [&](double x) { return Complex(density(s, x, t), 0.0); })
        .real();
}

double integrated_flux(const Superposition& s, double t, const QuadratureOptions& q) {
    return integrate_box(s.hi(), q.panels, [&](double x) { return Complex(flux(s, x, t), 0.0); })
        .real();
}

Complex tdse_residual(const Superposition& s, double x, double t) {
    const Complex i_hbar(0.0, kHbar);
    return i_hbar * s.dt(x, t) + kHbar * kHbar / (2.0 * s.mass()) * s.dxx(x, t);
}

double tdse_scale(const Superposition& s, double x) {
    double sum = 0.0;
    for (const auto& c : s.components()) {
        const ModeTerms m = mode_terms(c.mode, x);
        sum += std::abs(c.c) * std::abs(c.energy) * std::abs(m.norm * m.s);
    }
    return sum;
}

double beat_period(const Superposition& s) {
    double gap = std::numeric_limits<double>::infinity();
    const auto& comps = s.components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = i + 1; j < comps.size(); ++j) {
            const double d = std::abs(comps[i].energy - comps[j].energy);
            if (d > 0.0) gap = std::min(gap, d);
        }
    }
    if (!std::isfinite(gap)) return 0.0;
    return 2.0 * kPi * kHbar / gap;
}

}  // namespace pf::timedep
