// entropy.cpp - Stationary and time-dependent entropy production rates

#include "ness/entropy.hpp"

#include <cmath>

#include "ness/dynamics.hpp"

namespace ness {

const Mat4& time_reversal_operator()
{
    static const Mat4 e = Eigen::Vector4d(1.0, -1.0, 1.0, -1.0).asDiagonal();
    return e;
}

TimeReversalSplit time_reversal_split(const Mat4& drift)
{
    const Mat4& e = time_reversal_operator();
    const Mat4 mirrored = e * drift * e.transpose();
    return {0.5 * (drift + mirrored), 0.5 * (drift - mirrored)};
}

EntropyBreakdown entropy_production_diagonal(const CovarianceMatrix& sigma_s,
                                             const OscillatorParams& params)
{
    params.validate();
    const Mat4& s = sigma_s.matrix();
    EntropyBreakdown out;
    out.mu_a = 2.0 * params.kappa_a * ((s(0, 0) + s(1, 1)) / (2.0 * params.N_a + 1.0) - 1.0);
    out.mu_b = 2.0 * params.kappa_b * ((s(2, 2) + s(3, 3)) / (2.0 * params.N_b + 1.0) - 1.0);
    out.pi_s = out.mu_a + out.mu_b;
    out.phi_s = -out.pi_s;
    return out;
}

EntropyBreakdown entropy_production_offdiagonal(const CovarianceMatrix& sigma_s,
                                                const OscillatorParams& params)
{
    params.validate();
    const Mat4& s = sigma_s.matrix();
    EntropyBreakdown out;
    out.mu_a = params.G * s(1, 2) / (params.N_a + 0.5);
    out.mu_b = params.G * s(0, 3) / (params.N_b + 0.5);
    out.pi_s = out.mu_a + out.mu_b;
    out.phi_s = -out.pi_s;
    return out;
}

namespace {

struct TraceTerms {
    double half_tr_inv_sigma_d;  // 1/2 tr(S^-1 D)
    double tr_irr;               // tr(A_irr)
    double tr_quadratic;         // tr(A_irr^T D^-1 A_irr S)
};

TraceTerms trace_terms(const CovarianceMatrix& sigma, const OscillatorParams& params)
{
    const Mat4 drift = build_drift(params);
    const Mat4 diffusion = build_diffusion(params);
    const Mat4 a_irr = time_reversal_split(drift).irreversible;

    Eigen::LLT<Mat4> llt(sigma.matrix());
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("covariance matrix is singular or indefinite");
    }
    const Mat4 inv_sigma_d = llt.solve(diffusion);
    const Mat4 d_inv = diffusion.diagonal().cwiseInverse().asDiagonal();

    TraceTerms t;
    t.half_tr_inv_sigma_d = 0.5 * inv_sigma_d.trace();
    t.tr_irr = a_irr.trace();
    t.tr_quadratic = (a_irr.transpose() * d_inv * a_irr * sigma.matrix()).trace();
    return t;
}

} // namespace

double entropy_production_trace(const CovarianceMatrix& sigma, const OscillatorParams& params)
{
    const auto t = trace_terms(sigma, params);
    return t.half_tr_inv_sigma_d + 2.0 * t.tr_irr + 2.0 * t.tr_quadratic;
}

double entropy_flux_trace(const CovarianceMatrix& sigma, const OscillatorParams& params)
{
    const auto t = trace_terms(sigma, params);
    return -t.tr_irr - 2.0 * t.tr_quadratic;
}

double entropy_rate(const CovarianceMatrix& sigma, const OscillatorParams& params)
{
    const Mat4 derivative =
        covariance_derivative(build_drift(params), build_diffusion(params), sigma.matrix());
    Eigen::LLT<Mat4> llt(sigma.matrix());
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("covariance matrix is singular or indefinite");
    }
    return 0.5 * llt.solve(derivative).trace();
}

EntropyRates entropy_rates(const CovarianceMatrix& sigma, const OscillatorParams& params)
{
    const auto t = trace_terms(sigma, params);
    EntropyRates r;
    r.production = t.half_tr_inv_sigma_d + 2.0 * t.tr_irr + 2.0 * t.tr_quadratic;
    r.flux = -t.tr_irr - 2.0 * t.tr_quadratic;
    r.entropy_rate = entropy_rate(sigma, params);
    return r;
}

EntropyBreakdown stationary_entropy_production(const OscillatorParams& params)
{
    return entropy_production_diagonal(lyapunov_steady_state(params), params);
}

ContributionPair expand_small_G(const OscillatorParams& params)
{
    params.require_rescaled();
    const double w = params.omega_a;
    const double g2 = params.G * params.G;
    const double kt = params.kappa_a + params.kappa_b;
    const double kt2 = kt * kt;
    const double x = 1.0 + kt2 + w * w;
    // ((w - 1)^2 + kt^2) ((w + 1)^2 + kt^2)
    const double den = 2.0 * w * w * (kt2 - 1.0) + (kt2 + 1.0) * (kt2 + 1.0) + w * w * w * w;

    ContributionPair out;
    out.mu_a = g2 * kt * (x - 2.0 * w * (2.0 * params.N_a + 1.0) + 2.0 * params.N_b * x)
               / ((2.0 * params.N_a + 1.0) * den);
    out.mu_b = g2 * kt * (x - 2.0 * w * (2.0 * params.N_b + 1.0) + 2.0 * params.N_a * x)
               / ((2.0 * params.N_b + 1.0) * den);
    return out;
}

ContributionPair expand_large_omega(const OscillatorParams& params)
{
    params.require_rescaled();
    if (params.omega_a == 0.0) {
        throw std::invalid_argument("large-frequency tail requires omega_a != 0");
    }
    const double w2 = params.omega_a * params.omega_a;
    const double g2 = params.G * params.G;
    const double kt = params.kappa_a + params.kappa_b;
    const double kb = params.kappa_b;

    ContributionPair out;
    out.mu_a = g2 * kt * (1.0 + 2.0 * params.N_b) / (1.0 + 2.0 * params.N_a) / w2;
    out.mu_b = (g2 * kt * (1.0 + 2.0 * params.N_a) / (1.0 + 2.0 * params.N_b)
                + g2 * g2 * kb / (2.0 * (kb * kb + 1.0)))
               / w2;
    return out;
}

double identical_oscillators_pi(double kappa_a, double kappa_b, double G)
{
    if (!(kappa_a > 0.0) || !(kappa_b > 0.0) || !std::isfinite(G)) {
        throw std::invalid_argument("identical_oscillators_pi: rates must be positive, G finite");
    }
    const double g2 = G * G;
    const double kt = kappa_a + kappa_b;
    const double kab = kappa_a * kappa_b;
    const double chi = (kappa_a * kappa_a + 1.0) * (kappa_b * kappa_b + 1.0);
    const double den = 2.0 * (chi - g2) * (g2 + kab * (kt * kt + 4.0));
    if (!(chi - g2 > 0.0)) {
        throw UnstableSystemError("identical oscillators: coupling beyond the stability edge");
    }
    return g2 * kt * (g2 * (kt * kt - 3.0 * kab + 1.0) + 4.0 * kab * chi) / den;
}

} // namespace ness
