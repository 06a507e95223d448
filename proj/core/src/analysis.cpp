// analysis.cpp - Steady-state report assembly

#include "ness/analysis.hpp"

#include "ness/dynamics.hpp"

namespace ness {

SteadyStateReport analyze_steady_state(const OscillatorParams& params, double margin)
{
    SteadyStateReport r;
    r.params = params;
    const Mat4 drift = build_drift(params);
    const auto stability = check_stability(drift, margin);
    r.stable = stability.stable;
    r.max_real_part = stability.max_real_part;
    if (!r.stable) {
        return r;
    }
    r.sigma = lyapunov_steady_state(drift, build_diffusion(params));
    r.entropy = entropy_production_diagonal(*r.sigma, params);
    r.correlations = correlation_report(*r.sigma);
    return r;
}

} // namespace ness
