// sampler.hpp - Random steady states and the extremal curves of the (Pi_s, I) and (Pi_s, D) planes

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ness/analysis.hpp"
#include "ness/types.hpp"

namespace ness {

struct Range {
    double lo{0.0};
    double hi{0.0};
};

struct SampleSpec {
    Range omega_a{0.0, 3.0};
    Range G{0.0, 2.0};
    Range N_a{0.0, 10.0};
    Range N_b{0.0, 10.0};
    double kappa_a{0.5};
    double kappa_b{1.0};
    std::size_t count{10000};
    std::uint64_t seed{1};

    void validate() const;
};

// Name of the generator and of the uniform mapping, for output metadata.
std::string sampler_algorithm();

struct SamplePoint {
    OscillatorParams params;
    bool stable{false};
    double pi_s{0.0};
    double mutual_info{0.0};
    double discord{0.0};  // measurement on b
    double log_neg{0.0};
    bool entangled{false};
};

// Draws (omega_a, G, N_a, N_b) per point, in that order, from one mt19937_64 stream
// seeded with spec.seed, so the draws do not depend on the worker count. Unstable
// draws are kept with stable = false and zero figures of merit.
std::vector<SamplePoint> sample_steady_states(const SampleSpec& spec, std::size_t workers = 1);

enum class BoundKind { mutual_info, discord };

std::string to_string(BoundKind kind);

// Extremal configurations; G is the free coordinate.
//   mutual_info upper: omega_a = 1, N_a = N_b = 0 (any equal N gives the same curve)
//   mutual_info lower: omega_a = 0, N_a = 0, N_b = N_max
//   discord upper:     omega_a = 0, N_a = N_b = 0
enum class BoundRole { upper, lower };

OscillatorParams bound_configuration(BoundKind kind,
                                     BoundRole role,
                                     double kappa_a,
                                     double kappa_b,
                                     double N_max);

struct BoundPoint {
    double G{0.0};
    double pi_s{0.0};
    double value{0.0};
};

struct BoundCurve {
    BoundKind kind{BoundKind::mutual_info};
    BoundRole role{BoundRole::upper};
    OscillatorParams config;
    std::vector<BoundPoint> points;
    // Set when the G sweep was cut at the stability edge.
    bool truncated{false};
    double G_stop{0.0};

    // Value of the curve at the given production rate from the sampled points by
    // linear interpolation in Pi_s. Returns NaN outside the sampled Pi_s range.
    double interpolate(double pi_s) const;
};

BoundCurve bound_curve(BoundKind kind,
                       BoundRole role,
                       double kappa_a,
                       double kappa_b,
                       double G_max,
                       std::size_t n_points,
                       double N_max = 10.0);

// Curves of a given kind: mutual_info yields {upper, lower}, discord yields {upper}.
std::vector<BoundCurve> bound_curves(BoundKind kind,
                                     double kappa_a,
                                     double kappa_b,
                                     double G_max,
                                     std::size_t n_points,
                                     double N_max = 10.0);

// Figure of merit of the configuration at the coupling where its stationary Pi_s equals
// pi_s, located by bracketing and bisection in G >= 0. Returns NaN if pi_s is not
// reached before the stability edge or G_limit.
double bound_value_at(const BoundCurve& curve, double pi_s, double G_limit = 1e4);

// Limit of the lower mutual-information curve as Pi_s -> infinity.
double asymptotic_min_mutual_info(double kappa_a, double kappa_b);

} // namespace ness
