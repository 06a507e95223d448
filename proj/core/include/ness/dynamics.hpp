// dynamics.hpp - Drift/diffusion matrices, stability, stationary state and covariance evolution

#pragma once

#include <cstddef>
#include <vector>

#include "ness/types.hpp"

namespace ness {

// Drift matrix of the linear Langevin equation for (q_a, p_a, q_b, p_b):
//
//   [ -ka   wa    0    0  ]
//   [ -wa  -ka    G    0  ]
//   [  0    0   -kb   wb  ]
//   [  G    0   -wb  -kb  ]
Mat4 build_drift(const OscillatorParams& params);

// D = (1 + 2 N_a) ka 1_a (+) (1 + 2 N_b) kb 1_b
Mat4 build_diffusion(const OscillatorParams& params);

struct StabilityReport {
    bool stable{false};
    double max_real_part{0.0};
};

// Stable iff every eigenvalue has real part < -margin. The margin lets callers
// reject states sitting on the edge of the stability region.
StabilityReport check_stability(const Mat4& drift, double margin = 0.0);

inline bool is_stable(const Mat4& drift, double margin = 0.0)
{
    return check_stability(drift, margin).stable;
}

// Solves A S + S A^T = -D for the symmetric S. Throws UnstableSystemError if A is not
// stable and NumericalError if the reduced linear system is singular.
CovarianceMatrix lyapunov_steady_state(const Mat4& drift, const Mat4& diffusion);

CovarianceMatrix lyapunov_steady_state(const OscillatorParams& params);

// max |A S + S A^T + D|
double lyapunov_residual(const Mat4& drift, const Mat4& diffusion, const Mat4& sigma);

// Right-hand side of the covariance equation of motion, A S + S A^T + D.
Mat4 covariance_derivative(const Mat4& drift, const Mat4& diffusion, const Mat4& sigma);

struct TrajectoryPoint {
    double time{0.0};
    CovarianceMatrix sigma;
};

using Trajectory = std::vector<TrajectoryPoint>;

struct IntegrationOptions {
    // Step size; <= 0 selects default_time_step(drift).
    double dt{0.0};
    // Record every `stride` steps. The final time is always recorded.
    std::size_t stride{1};
};

// Step for which halving changes the RK4 endpoint by well under 1e-8 for the
// parameter ranges used here: 0.02 / max(1, spectral radius of A).
double default_time_step(const Mat4& drift);

// Fixed-step classical RK4 on dS/dt = A S + S A^T + D, symmetrizing after each step.
// The last step is shortened so that t_final is hit exactly. Throws NumericalError
// (with the step index) if an iterate becomes non-finite.
Trajectory integrate_covariance(const CovarianceMatrix& sigma0,
                                const Mat4& drift,
                                const Mat4& diffusion,
                                double t_final,
                                const IntegrationOptions& options = {});

} // namespace ness
