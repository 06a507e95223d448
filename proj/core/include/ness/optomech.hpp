// optomech.hpp - Linearized cavity optomechanics mapped onto the two-oscillator model
//
// Cavity mode a (effective detuning Delta, decay kappa, zero-temperature bath) couples to
// mechanical mode b (frequency 1, damping gamma_m, bath occupation N) through the
// enhanced coupling g, giving G = 2 g in the oscillator model.

#pragma once

#include <string>
#include <vector>

#include "ness/analysis.hpp"
#include "ness/types.hpp"

namespace ness {

struct OptomechConfig {
    double Delta{1.0};
    double g{0.005};
    double kappa{0.2};
    double gamma_m{1e-4};
    double N{1000.0};

    void validate() const;
};

OscillatorParams to_oscillator_params(const OptomechConfig& cfg);

// g = sqrt(2) g0 |E| / sqrt(kappa^2 + Delta^2)
double enhanced_coupling(double g0, double E, double kappa, double Delta);

// C = 4 g^2 / (kappa gamma_m N); throws std::domain_error for N = 0.
double cooperativity(const OptomechConfig& cfg);

// Second order in G = 2g with gamma_m -> 0:
// (2 kappa G^2 / (2N+1)) (N^2 / ((Delta-1)^2 + kappa^2) + (N+1)^2 / ((Delta+1)^2 + kappa^2))
double pi_small_g_expansion(const OptomechConfig& cfg);

enum class SidebandRegime { cooling, heating, neutral, unstable };

std::string to_string(SidebandRegime regime);

struct RegimeRecord {
    OptomechConfig config;
    bool stable{false};
    double mu_a{0.0};
    double mu_b{0.0};
    double pi_s{0.0};
    double mutual_info{0.0};
    double discord{0.0};
    double log_neg{0.0};
    // Sign of mu_b: negative cools the mechanics, positive heats it.
    SidebandRegime regime{SidebandRegime::unstable};
};

RegimeRecord regime_record(const OptomechConfig& cfg, double margin = kDefaultStabilityMargin);

// One record per detuning, other fields taken from cfg.
std::vector<RegimeRecord> regime_report(const OptomechConfig& cfg,
                                        const std::vector<double>& deltas,
                                        std::size_t workers = 1);

// One record per coupling, other fields taken from cfg.
std::vector<RegimeRecord> coupling_sweep(const OptomechConfig& cfg,
                                         const std::vector<double>& gs,
                                         std::size_t workers = 1);

// Largest g in [0, g_max] below which the linearized dynamics is stable at cfg.Delta,
// by bisection on the stability flag. Returns g_max if g_max itself is stable.
double stability_edge_g(const OptomechConfig& cfg,
                        double g_max,
                        double tol = 1e-12,
                        double margin = 0.0);

} // namespace ness
