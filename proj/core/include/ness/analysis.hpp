// analysis.hpp - One-call evaluation of every steady-state figure of merit

#pragma once

#include <optional>

#include "ness/correlations.hpp"
#include "ness/entropy.hpp"
#include "ness/types.hpp"

namespace ness {

// States whose slowest mode decays slower than this are treated as unstable.
inline constexpr double kDefaultStabilityMargin = 1e-6;

struct SteadyStateReport {
    OscillatorParams params;
    bool stable{false};
    double max_real_part{0.0};
    // Present only for stable parameters.
    std::optional<CovarianceMatrix> sigma;
    EntropyBreakdown entropy;
    CorrelationReport correlations;
};

SteadyStateReport analyze_steady_state(const OscillatorParams& params,
                                       double margin = kDefaultStabilityMargin);

} // namespace ness
