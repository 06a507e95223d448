// correlations.hpp - Renyi-2 entropies, mutual information, Gaussian discord and negativity
//
// All quantities are in nats and use the vacuum-variance-1/2 convention. The discord
// is the Renyi-2 Gaussian discord optimized over pure Gaussian measurements on one mode.

#pragma once

#include <string>

#include "ness/types.hpp"

namespace ness {

enum class MeasuredMode { a, b };

std::string to_string(MeasuredMode mode);

struct SymplecticInvariants {
    double I1{0.0};  // det sigma_a
    double I2{0.0};  // det sigma_b
    double I3{0.0};  // det c (signed)
    double I4{0.0};  // det sigma

    double gamma_plus() const { return 1.0 + 4.0 * I2; }
    double gamma_minus() const { return 1.0 - 4.0 * I2; }
    double lambda_plus() const { return I1 * I2 + I3 * I3; }
    double lambda_minus() const { return I1 * I2 - I3 * I3; }
};

SymplecticInvariants symplectic_invariants(const CovarianceMatrix& sigma);

// Standard form  [[a,0,c,0],[0,a,0,d],[c,0,b,0],[0,d,0,b]]  reached by local symplectic maps,
// with c >= |d|.
struct StandardForm {
    double a{0.0};
    double b{0.0};
    double c{0.0};
    double d{0.0};
};

StandardForm standard_form(const CovarianceMatrix& sigma);

// Seed of a pure single-mode Gaussian measurement:
// gamma = R(theta) diag(lam/2, 1/(2 lam)) R(theta)^T. lam = +inf denotes the homodyne
// limit, measuring the quadrature along R(theta) (0, 1)^T.
struct GaussianMeasurement {
    double theta{0.0};
    double lam{1.0};

    bool is_homodyne() const;
    // Throws std::domain_error in the homodyne limit, where the seed is unbounded.
    Mat2 seed_covariance() const;
};

// S_2 = 1/2 ln det sigma + n ln 2
double renyi2_entropy(const Mat2& sigma);
double renyi2_entropy(const CovarianceMatrix& sigma);

// Shannon entropy of the Wigner function: 1/2 ln det sigma + n ln(pi e)
double wigner_shannon_entropy(const Mat2& sigma);
double wigner_shannon_entropy(const CovarianceMatrix& sigma);

double mutual_information(const CovarianceMatrix& sigma);

enum class DiscordBranch { homodyne, general };

std::string to_string(DiscordBranch branch);

struct ClosedFormDiscord {
    double value{0.0};
    double e_min{0.0};  // min det of the conditional state, in the measured frame
    DiscordBranch branch{DiscordBranch::homodyne};
    bool in_dead_zone{false};
};

// Closed-form optimum via the standard form. Inside a relative 1e-12 band around the
// branch boundary both branches are evaluated and the smaller one is kept.
ClosedFormDiscord discord_closed_form_detail(const CovarianceMatrix& sigma,
                                             MeasuredMode measured = MeasuredMode::b);

double discord_closed_form(const CovarianceMatrix& sigma, MeasuredMode measured = MeasuredMode::b);

// Same optimum expressed purely through I1..I4. Loses accuracy when the measured mode
// is close to pure and weakly correlated, where the branch test cancels.
ClosedFormDiscord discord_invariant_form(const CovarianceMatrix& sigma,
                                         MeasuredMode measured = MeasuredMode::b);

struct NumericDiscordOptions {
    int grid_theta{64};
    int grid_log_lambda{64};
    double log_lambda_bound{12.0};
    int max_iterations{2000};
    double tolerance{1e-15};
};

struct NumericDiscord {
    double value{0.0};
    GaussianMeasurement measurement;
    double conditional_det{0.0};
    int iterations{0};
};

class DiscordOptimizationError : public NumericalError {
public:
    DiscordOptimizationError(const std::string& what, double best_value)
        : NumericalError(what), best_value_(best_value)
    {
    }
    double best_value() const { return best_value_; }

private:
    double best_value_;
};

// Conditional covariance of the unmeasured mode after measuring the other with seed gamma.
Mat2 conditional_covariance(const CovarianceMatrix& sigma,
                            const GaussianMeasurement& measurement,
                            MeasuredMode measured = MeasuredMode::b);

// Direct minimization of det sigma_cond over (theta, ln lam): coarse grid followed by a
// Nelder-Mead simplex, compared against the exact homodyne optimum.
NumericDiscord discord_numeric(const CovarianceMatrix& sigma,
                               MeasuredMode measured = MeasuredMode::b,
                               const NumericDiscordOptions& options = {});

// J = I - D
double classical_correlations(const CovarianceMatrix& sigma, MeasuredMode measured = MeasuredMode::b);

// Smallest symplectic eigenvalue of the partial transpose.
double partial_transpose_min_eigenvalue(const CovarianceMatrix& sigma);

// E_N = max(0, -ln(2 nu_tilde_minus))
double log_negativity(const CovarianceMatrix& sigma);

// Mutual information of the steady state for omega_a = omega_b = 1, kappa_a = kappa_b,
// equal bath occupations (independent of N).
double identical_oscillators_mutual_info(double kappa, double G);

struct CorrelationReport {
    double renyi2_I{0.0};
    double discord_a_given_b{0.0};  // measurement on b
    double discord_b_given_a{0.0};  // measurement on a
    double classical_J{0.0};        // I - discord_a_given_b
    double log_negativity{0.0};
    SymplecticInvariants invariants;
};

CorrelationReport correlation_report(const CovarianceMatrix& sigma);

} // namespace ness
