// sampler.cpp - Seeded random steady states and bound curves

#include "ness/sampler.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "ness/dynamics.hpp"
#include "ness/entropy.hpp"
#include "ness/parallel.hpp"

namespace ness {

namespace {

double uniform53(std::mt19937_64& gen, const Range& r)
{
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return r.lo + (r.hi - r.lo) * u;
}

void check_range(const Range& r, const char* name, bool non_negative)
{
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !(r.hi > r.lo)) {
        throw std::invalid_argument(std::string("sample range for ") + name + " must satisfy lo < hi");
    }
    if (non_negative && r.lo < 0.0) {
        throw std::invalid_argument(std::string("sample range for ") + name + " must be non-negative");
    }
}

double figure_of_merit(BoundKind kind, const CovarianceMatrix& sigma)
{
    return kind == BoundKind::mutual_info ? mutual_information(sigma)
                                          : discord_closed_form(sigma, MeasuredMode::b);
}

} // namespace

void SampleSpec::validate() const
{
    check_range(omega_a, "omega_a", false);
    check_range(G, "G", false);
    check_range(N_a, "N_a", true);
    check_range(N_b, "N_b", true);
    if (!(kappa_a > 0.0) || !(kappa_b > 0.0) || !std::isfinite(kappa_a) || !std::isfinite(kappa_b)) {
        throw std::invalid_argument("sample spec: dissipation rates must be positive and finite");
    }
    if (count < 1) {
        throw std::invalid_argument("sample spec: count must be at least 1");
    }
}

std::string sampler_algorithm()
{
    return "mt19937_64; uniform = lo + (hi - lo) * (x >> 11) * 2^-53; draw order omega_a, G, N_a, N_b";
}

std::vector<SamplePoint> sample_steady_states(const SampleSpec& spec, std::size_t workers)
{
    spec.validate();
    std::vector<SamplePoint> points(spec.count);
    std::mt19937_64 gen(spec.seed);
    for (auto& p : points) {
        p.params.omega_a = uniform53(gen, spec.omega_a);
        p.params.G = uniform53(gen, spec.G);
        p.params.N_a = uniform53(gen, spec.N_a);
        p.params.N_b = uniform53(gen, spec.N_b);
        p.params.omega_b = 1.0;
        p.params.kappa_a = spec.kappa_a;
        p.params.kappa_b = spec.kappa_b;
    }

    parallel_for(points.size(), workers, [&](std::size_t i) {
        auto& p = points[i];
        const auto report = analyze_steady_state(p.params);
        p.stable = report.stable;
        if (!p.stable) return;
        p.pi_s = report.entropy.pi_s;
        p.mutual_info = report.correlations.renyi2_I;
        p.discord = report.correlations.discord_a_given_b;
        p.log_neg = report.correlations.log_negativity;
        p.entangled = p.log_neg > 0.0;
    });
    return points;
}

std::string to_string(BoundKind kind)
{
    return kind == BoundKind::mutual_info ? "mutual_info" : "discord";
}

OscillatorParams bound_configuration(BoundKind kind,
                                     BoundRole role,
                                     double kappa_a,
                                     double kappa_b,
                                     double N_max)
{
    OscillatorParams p;
    p.kappa_a = kappa_a;
    p.kappa_b = kappa_b;
    p.omega_b = 1.0;
    p.G = 0.0;
    if (kind == BoundKind::discord) {
        if (role == BoundRole::lower) {
            throw std::invalid_argument("no lower bound configuration for the discord");
        }
        p.omega_a = 0.0;
        p.N_a = p.N_b = 0.0;
    }
    else if (role == BoundRole::upper) {
        p.omega_a = 1.0;
        p.N_a = p.N_b = 0.0;
    }
    else {
        p.omega_a = 0.0;
        p.N_a = 0.0;
        p.N_b = N_max;
    }
    p.validate();
    return p;
}

double BoundCurve::interpolate(double pi_s) const
{
    if (points.empty() || !std::isfinite(pi_s)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        const auto& p0 = points[i - 1];
        const auto& p1 = points[i];
        if (pi_s >= p0.pi_s && pi_s <= p1.pi_s) {
            if (p1.pi_s == p0.pi_s) return std::max(p0.value, p1.value);
            const double t = (pi_s - p0.pi_s) / (p1.pi_s - p0.pi_s);
            return p0.value + t * (p1.value - p0.value);
        }
    }
    if (points.size() == 1 && pi_s == points.front().pi_s) {
        return points.front().value;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

BoundCurve bound_curve(BoundKind kind,
                       BoundRole role,
                       double kappa_a,
                       double kappa_b,
                       double G_max,
                       std::size_t n_points,
                       double N_max)
{
    if (n_points < 2 || !(G_max > 0.0) || !std::isfinite(G_max)) {
        throw std::invalid_argument("bound curve needs G_max > 0 and at least 2 points");
    }
    BoundCurve curve;
    curve.kind = kind;
    curve.role = role;
    curve.config = bound_configuration(kind, role, kappa_a, kappa_b, N_max);
    curve.G_stop = G_max;
    curve.points.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        OscillatorParams p = curve.config;
        p.G = G_max * static_cast<double>(i) / static_cast<double>(n_points - 1);
        const Mat4 drift = build_drift(p);
        if (!check_stability(drift, kDefaultStabilityMargin).stable) {
            curve.truncated = true;
            curve.G_stop = p.G;
            break;
        }
        const auto sigma = lyapunov_steady_state(drift, build_diffusion(p));
        curve.points.push_back({p.G, entropy_production_diagonal(sigma, p).pi_s,
                                figure_of_merit(kind, sigma)});
    }
    return curve;
}

std::vector<BoundCurve> bound_curves(BoundKind kind,
                                     double kappa_a,
                                     double kappa_b,
                                     double G_max,
                                     std::size_t n_points,
                                     double N_max)
{
    std::vector<BoundCurve> out;
    out.push_back(bound_curve(kind, BoundRole::upper, kappa_a, kappa_b, G_max, n_points, N_max));
    if (kind == BoundKind::mutual_info) {
        out.push_back(bound_curve(kind, BoundRole::lower, kappa_a, kappa_b, G_max, n_points, N_max));
    }
    return out;
}

double bound_value_at(const BoundCurve& curve, double pi_s, double G_limit)
{
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    if (!std::isfinite(pi_s) || pi_s < 0.0) return nan;
    if (pi_s == 0.0) return 0.0;

    // Pi_s(G), +inf past the stability edge.
    auto pi_of = [&](double g) {
        OscillatorParams p = curve.config;
        p.G = g;
        const Mat4 drift = build_drift(p);
        if (!check_stability(drift, kDefaultStabilityMargin).stable) {
            return std::numeric_limits<double>::infinity();
        }
        return entropy_production_diagonal(lyapunov_steady_state(drift, build_diffusion(p)), p).pi_s;
    };

    double lo = 0.0;
    double hi = 1e-3;
    while (pi_of(hi) < pi_s) {
        lo = hi;
        hi *= 2.0;
        if (hi > G_limit) return nan;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (pi_of(mid) < pi_s) lo = mid;
        else hi = mid;
    }
    if (!std::isfinite(pi_of(hi))) return nan;

    OscillatorParams p = curve.config;
    p.G = 0.5 * (lo + hi);
    return figure_of_merit(curve.kind, lyapunov_steady_state(p));
}

double asymptotic_min_mutual_info(double kappa_a, double kappa_b)
{
    if (!(kappa_a > 0.0) || !(kappa_b > 0.0)) {
        throw std::invalid_argument("asymptotic_min_mutual_info: rates must be positive");
    }
    const double ka = kappa_a, kb = kappa_b;
    const double num = (ka + 2.0 * kb)
                       * (2.0 * ka * ka * ka + kb + 8.0 * ka * ka * kb + 8.0 * ka * kb * kb + kb * kb * kb);
    return 0.5 * std::log(num / (ka * kb * (1.0 + kb * kb)));
}

} // namespace ness
