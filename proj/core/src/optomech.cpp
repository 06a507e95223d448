// optomech.cpp - Optomechanical parameter mapping and regime diagnostics

#include "ness/optomech.hpp"

#include <cmath>
#include <sstream>

#include "ness/dynamics.hpp"
#include "ness/parallel.hpp"

namespace ness {

void OptomechConfig::validate() const
{
    for (double x : {Delta, g, kappa, gamma_m, N}) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("non-finite optomechanical parameter");
        }
    }
    if (!(kappa > 0.0) || !(gamma_m > 0.0)) {
        throw std::invalid_argument("optomechanics: kappa and gamma_m must be strictly positive");
    }
    if (N < 0.0) {
        throw std::invalid_argument("optomechanics: bath occupation must be non-negative");
    }
}

OscillatorParams to_oscillator_params(const OptomechConfig& cfg)
{
    cfg.validate();
    OscillatorParams p;
    p.omega_a = cfg.Delta;
    p.omega_b = 1.0;
    p.G = 2.0 * cfg.g;
    p.kappa_a = cfg.kappa;
    p.kappa_b = cfg.gamma_m;
    p.N_a = 0.0;
    p.N_b = cfg.N;
    return p;
}

double enhanced_coupling(double g0, double E, double kappa, double Delta)
{
    if (!std::isfinite(g0) || !std::isfinite(E) || !std::isfinite(Delta) || !(kappa > 0.0)) {
        throw std::invalid_argument("enhanced_coupling: finite inputs and kappa > 0 required");
    }
    return std::sqrt(2.0) * g0 * std::abs(E) / std::sqrt(kappa * kappa + Delta * Delta);
}

double cooperativity(const OptomechConfig& cfg)
{
    cfg.validate();
    if (cfg.N == 0.0) {
        throw std::domain_error("cooperativity is undefined for a zero-temperature mechanical bath");
    }
    return 4.0 * cfg.g * cfg.g / (cfg.kappa * cfg.gamma_m * cfg.N);
}

double pi_small_g_expansion(const OptomechConfig& cfg)
{
    cfg.validate();
    const double G = 2.0 * cfg.g;
    const double k2 = cfg.kappa * cfg.kappa;
    const double n = cfg.N;
    const double red = n * n / ((cfg.Delta - 1.0) * (cfg.Delta - 1.0) + k2);
    const double blue = (n + 1.0) * (n + 1.0) / ((cfg.Delta + 1.0) * (cfg.Delta + 1.0) + k2);
    return 2.0 * cfg.kappa * G * G / (2.0 * n + 1.0) * (red + blue);
}

std::string to_string(SidebandRegime regime)
{
    switch (regime) {
    case SidebandRegime::cooling: return "cooling";
    case SidebandRegime::heating: return "heating";
    case SidebandRegime::neutral: return "neutral";
    case SidebandRegime::unstable: return "unstable";
    }
    return "unknown";
}

RegimeRecord regime_record(const OptomechConfig& cfg, double margin)
{
    RegimeRecord r;
    r.config = cfg;
    const auto report = analyze_steady_state(to_oscillator_params(cfg), margin);
    r.stable = report.stable;
    if (!r.stable) {
        r.regime = SidebandRegime::unstable;
        return r;
    }
    r.mu_a = report.entropy.mu_a;
    r.mu_b = report.entropy.mu_b;
    r.pi_s = report.entropy.pi_s;
    r.mutual_info = report.correlations.renyi2_I;
    r.discord = report.correlations.discord_a_given_b;
    r.log_neg = report.correlations.log_negativity;
    r.regime = r.mu_b < 0.0   ? SidebandRegime::cooling
               : r.mu_b > 0.0 ? SidebandRegime::heating
                              : SidebandRegime::neutral;
    return r;
}

std::vector<RegimeRecord> regime_report(const OptomechConfig& cfg,
                                        const std::vector<double>& deltas,
                                        std::size_t workers)
{
    cfg.validate();
    std::vector<RegimeRecord> out(deltas.size());
    parallel_for(deltas.size(), workers, [&](std::size_t i) {
        OptomechConfig c = cfg;
        c.Delta = deltas[i];
        out[i] = regime_record(c);
    });
    return out;
}

std::vector<RegimeRecord> coupling_sweep(const OptomechConfig& cfg,
                                         const std::vector<double>& gs,
                                         std::size_t workers)
{
    cfg.validate();
    std::vector<RegimeRecord> out(gs.size());
    parallel_for(gs.size(), workers, [&](std::size_t i) {
        OptomechConfig c = cfg;
        c.g = gs[i];
        out[i] = regime_record(c);
    });
    return out;
}

double stability_edge_g(const OptomechConfig& cfg, double g_max, double tol, double margin)
{
    if (!(g_max > 0.0) || !(tol > 0.0)) {
        throw std::invalid_argument("stability_edge_g: g_max and tol must be positive");
    }
    auto stable_at = [&](double g) {
        OptomechConfig c = cfg;
        c.g = g;
        return check_stability(build_drift(to_oscillator_params(c)), margin).stable;
    };
    if (!stable_at(0.0)) {
        std::ostringstream os;
        os << "uncoupled system is not stable at Delta=" << cfg.Delta;
        throw UnstableSystemError(os.str());
    }
    if (stable_at(g_max)) return g_max;
    double lo = 0.0, hi = g_max;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (stable_at(mid)) lo = mid;
        else hi = mid;
    }
    return lo;
}

} // namespace ness
