// entropy.hpp - Entropy production rate and entropy flux of the two-oscillator Gaussian dynamics
//
// Three independent routes to the stationary production rate are provided:
//   * diagonal:      mu_k = 2 kappa_k ( ([S]_qq + [S]_pp) / (2 N_k + 1) - 1 )
//   * off-diagonal:  mu_a = G [S]_{p_a q_b} / (N_a + 1/2),  mu_b = G [S]_{q_a p_b} / (N_b + 1/2)
//   * trace:         Pi = 1/2 tr(S^-1 D) + 2 tr(A_irr) + 2 tr(A_irr^T D^-1 A_irr S)
// The trace route is valid away from stationarity as well, together with the flux
// Phi = -tr(A_irr) - 2 tr(A_irr^T D^-1 A_irr S); dS/dt = Phi + Pi.

#pragma once

#include "ness/types.hpp"

namespace ness {

struct EntropyBreakdown {
    double mu_a{0.0};
    double mu_b{0.0};
    double pi_s{0.0};   // mu_a + mu_b
    double phi_s{0.0};  // -pi_s at stationarity
};

// Split of the drift into time-reversal even/odd parts under E = diag(1, -1, 1, -1).
struct TimeReversalSplit {
    Mat4 irreversible;  // (A + E A E^T) / 2
    Mat4 reversible;    // (A - E A E^T) / 2
};

const Mat4& time_reversal_operator();

TimeReversalSplit time_reversal_split(const Mat4& drift);

EntropyBreakdown entropy_production_diagonal(const CovarianceMatrix& sigma_s,
                                             const OscillatorParams& params);

EntropyBreakdown entropy_production_offdiagonal(const CovarianceMatrix& sigma_s,
                                                const OscillatorParams& params);

// Pi(t) for an arbitrary physical state.
double entropy_production_trace(const CovarianceMatrix& sigma, const OscillatorParams& params);

// Phi(t) for an arbitrary physical state.
double entropy_flux_trace(const CovarianceMatrix& sigma, const OscillatorParams& params);

// dS/dt = 1/2 tr(S^-1 (A S + S A^T + D)) for the Wigner-Shannon (equivalently Renyi-2) entropy.
double entropy_rate(const CovarianceMatrix& sigma, const OscillatorParams& params);

struct EntropyRates {
    double entropy_rate{0.0};  // dS/dt
    double flux{0.0};          // Phi
    double production{0.0};    // Pi
};

EntropyRates entropy_rates(const CovarianceMatrix& sigma, const OscillatorParams& params);

// Solves for the steady state and returns the diagonal-form breakdown.
EntropyBreakdown stationary_entropy_production(const OscillatorParams& params);

struct ContributionPair {
    double mu_a{0.0};
    double mu_b{0.0};
};

// O(G^2) terms of mu_a, mu_b for small coupling (omega_b = 1 units).
ContributionPair expand_small_G(const OscillatorParams& params);

// Leading 1/omega_a^2 tails of mu_a, mu_b for omega_a >> 1 (omega_b = 1 units).
ContributionPair expand_large_omega(const OscillatorParams& params);

// Closed-form production rate for omega_a = omega_b = 1 and equal bath occupations.
// Independent of N. Throws UnstableSystemError when the denominator is not positive.
double identical_oscillators_pi(double kappa_a, double kappa_b, double G);

} // namespace ness
