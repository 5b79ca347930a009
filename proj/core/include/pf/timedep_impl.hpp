#pragma once

#include "pf/error.hpp"

namespace pf::timedep {

template <WaveField F>
ContinuityTerms continuity_terms(const F& f, double x, double t, double h_x, double h_t) {
    if (!(h_x > 0.0) || !(h_t > 0.0)) throw DomainError("continuity_residual: steps must be positive");
    if (!(x - h_x > f.lo() && x + h_x < f.hi())) {
        throw DomainError("continuity_residual: x must be interior to the domain");
    }
    const double d_rho_dt = (density(f, x, t + h_t) - density(f, x, t - h_t)) / (2.0 * h_t);
    const double d_j_dx = (flux(f, x + h_x, t) - flux(f, x - h_x, t)) / (2.0 * h_x);
    return {d_rho_dt, d_j_dx, d_rho_dt + d_j_dx};
}

}  // namespace pf::timedep
