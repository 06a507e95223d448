// commands.cpp - sweep, random, optomech and trajectory runs

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <ness/ness.hpp>

namespace ness::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::string kUnits = "all rates and frequencies in units of omega_b; entropies in nats";

std::string num(double x)
{
    return format_double(x);
}

Metadata base_metadata(Command command, const RunOptions& options)
{
    Metadata m{{"command", to_string(command)}, {"units", kUnits}};
    if (!options.source.empty()) m.emplace_back("config", options.source);
    return m;
}

// Cartesian product, first axis outermost.
std::vector<std::vector<double>> cartesian(const std::vector<std::vector<double>>& axes)
{
    std::vector<std::vector<double>> out{{}};
    for (const auto& axis : axes) {
        if (axis.empty()) throw UsageError("empty grid");
        std::vector<std::vector<double>> next;
        next.reserve(out.size() * axis.size());
        for (const auto& prefix : out) {
            for (double v : axis) {
                auto p = prefix;
                p.push_back(v);
                next.push_back(std::move(p));
            }
        }
        out = std::move(next);
    }
    return out;
}

double margin_of(const Settings& s)
{
    const double m = s.scalar("stability_margin", kDefaultStabilityMargin);
    if (m < 0.0) throw UsageError("stability_margin must be non-negative");
    return m;
}

const std::set<std::string> kSweepKeys{"command", "omega_a", "G", "kappa_a", "kappa_b",
                                       "N_a", "N_b", "N_ratio", "stability_margin"};
const std::set<std::string> kRandomKeys{"command", "omega_a", "G", "N_a", "N_b", "kappa_a", "kappa_b",
                                        "count", "seed", "bound_points", "bound_G_max", "N_max"};
const std::set<std::string> kOptomechKeys{"command", "Delta", "g", "kappa", "gamma_m", "N",
                                          "stability_margin"};
const std::set<std::string> kTrajectoryKeys{"command", "omega_a", "G", "kappa_a", "kappa_b", "N_a", "N_b",
                                            "t_final", "dt", "stride", "initial", "init_N_a", "init_N_b"};

} // namespace

Command parse_command(const std::string& name)
{
    if (name == "sweep") return Command::sweep;
    if (name == "random") return Command::random;
    if (name == "optomech") return Command::optomech;
    if (name == "trajectory") return Command::trajectory;
    throw UsageError("unknown command '" + name + "'");
}

std::string to_string(Command command)
{
    switch (command) {
    case Command::sweep: return "sweep";
    case Command::random: return "random";
    case Command::optomech: return "optomech";
    case Command::trajectory: return "trajectory";
    }
    return "unknown";
}

std::vector<Column> schema(Command command)
{
    switch (command) {
    case Command::sweep:
        return {
            {"series", "series name from the config"},
            {"omega_a", "frequency of oscillator a"},
            {"omega_b", "frequency of oscillator b (always 1)"},
            {"G", "coupling strength"},
            {"kappa_a", "damping rate of a"},
            {"kappa_b", "damping rate of b"},
            {"N_a", "bath occupation of a"},
            {"N_b", "bath occupation of b"},
            {"stable", "1 if every drift eigenvalue has real part below -stability_margin"},
            {"max_real_part", "largest real part of the drift eigenvalues"},
            {"mu_a", "entropy production contribution of bath a"},
            {"mu_b", "entropy production contribution of bath b"},
            {"pi_s", "stationary entropy production rate mu_a + mu_b"},
            {"phi_s", "stationary entropy flux (-pi_s)"},
            {"mutual_info", "Renyi-2 mutual information"},
            {"discord_a_given_b", "Renyi-2 Gaussian discord, measurement on b"},
            {"discord_b_given_a", "Renyi-2 Gaussian discord, measurement on a"},
            {"classical_J", "one-way classical correlations, mutual_info - discord_a_given_b"},
            {"log_neg", "logarithmic negativity"},
            {"entangled", "1 if log_neg > 0"},
        };
    case Command::random:
        return {
            {"index", "draw index"},
            {"omega_a", "frequency of oscillator a"},
            {"G", "coupling strength"},
            {"N_a", "bath occupation of a"},
            {"N_b", "bath occupation of b"},
            {"stable", "1 if the draw has a stationary state"},
            {"pi_s", "stationary entropy production rate"},
            {"mutual_info", "Renyi-2 mutual information"},
            {"discord", "Renyi-2 Gaussian discord, measurement on b"},
            {"log_neg", "logarithmic negativity"},
            {"entangled", "1 if log_neg > 0"},
            {"label", "entangled, separable or unstable"},
        };
    case Command::optomech:
        return {
            {"series", "series name from the config"},
            {"Delta", "effective detuning"},
            {"g", "enhanced optomechanical coupling"},
            {"kappa", "cavity decay rate"},
            {"gamma_m", "mechanical damping rate"},
            {"N", "mechanical bath occupation"},
            {"G", "mapped oscillator coupling 2 g"},
            {"stable", "1 if the linearized dynamics is stable"},
            {"mu_a", "optical contribution to the entropy production"},
            {"mu_b", "mechanical contribution to the entropy production"},
            {"pi_s", "stationary entropy production rate"},
            {"pi_small_g", "second-order small-coupling estimate of pi_s"},
            {"mutual_info", "Renyi-2 mutual information"},
            {"discord", "Renyi-2 Gaussian discord, measurement on the mechanics"},
            {"log_neg", "logarithmic negativity"},
            {"cooperativity", "4 g^2 / (kappa gamma_m N); nan for N = 0"},
            {"regime", "cooling (mu_b < 0), heating (mu_b > 0), neutral or unstable"},
        };
    case Command::trajectory:
        return {
            {"t", "time"},
            {"entropy", "Wigner-Shannon entropy of the two-mode state"},
            {"dS_dt", "entropy rate 1/2 tr(sigma^-1 dsigma/dt)"},
            {"phi", "entropy flux"},
            {"pi", "entropy production rate"},
            {"balance_residual", "dS_dt - phi - pi"},
        };
    }
    return {};
}

std::vector<Column> bounds_schema()
{
    return {
        {"curve", "mutual_info_upper, mutual_info_lower or discord_upper"},
        {"G", "coupling along the extremal configuration"},
        {"pi_s", "stationary entropy production rate"},
        {"value", "mutual information or discord"},
    };
}

RunResult run_sweep(const ConfigFile& config, const RunOptions& options)
{
    struct Job {
        std::string series;
        OscillatorParams params;
        double margin;
    };
    std::vector<Job> jobs;
    for (const auto& s : expand_series(config)) {
        s.require_known(kSweepKeys);
        if (s.has("N_ratio") && s.has("N_b")) {
            throw UsageError("series '" + s.series() + "': N_ratio and N_b are mutually exclusive");
        }
        const OscillatorParams defaults;
        const bool ratio = s.has("N_ratio");
        const auto grid = cartesian({
            s.values("omega_a", defaults.omega_a),
            s.values("G", defaults.G),
            s.values("kappa_a", defaults.kappa_a),
            s.values("kappa_b", defaults.kappa_b),
            s.values("N_a", defaults.N_a),
            ratio ? s.values("N_ratio") : s.values("N_b", defaults.N_b),
        });
        const double margin = margin_of(s);
        for (const auto& x : grid) {
            OscillatorParams p;
            p.omega_a = x[0];
            p.G = x[1];
            p.kappa_a = x[2];
            p.kappa_b = x[3];
            p.N_a = x[4];
            p.N_b = ratio ? x[5] * x[4] : x[5];
            p.validate();
            jobs.push_back({s.series(), p, margin});
        }
    }

    std::vector<SteadyStateReport> reports(jobs.size());
    parallel_for(jobs.size(), options.workers, [&](std::size_t i) {
        reports[i] = analyze_steady_state(jobs[i].params, jobs[i].margin);
    });

    RunResult result;
    result.metadata = base_metadata(Command::sweep, options);
    result.metadata.emplace_back("points", std::to_string(jobs.size()));
    result.table.columns = schema(Command::sweep);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto& p = jobs[i].params;
        const auto& r = reports[i];
        const auto& c = r.correlations;
        const auto v = [&](double x) { return Cell{r.stable ? x : kNaN}; };
        result.table.add_row({jobs[i].series, p.omega_a, p.omega_b, p.G, p.kappa_a, p.kappa_b, p.N_a, p.N_b,
                              r.stable, r.max_real_part, v(r.entropy.mu_a), v(r.entropy.mu_b),
                              v(r.entropy.pi_s), v(r.entropy.phi_s), v(c.renyi2_I), v(c.discord_a_given_b),
                              v(c.discord_b_given_a), v(c.classical_J), v(c.log_negativity),
                              r.stable && c.log_negativity > 0.0});
    }
    return result;
}

RunResult run_random(const ConfigFile& config, const RunOptions& options)
{
    if (!config.series.empty()) {
        throw UsageError("random does not support [series] blocks");
    }
    const Settings s("default", config.base);
    s.require_known(kRandomKeys);

    SampleSpec spec;
    spec.omega_a = s.range("omega_a", spec.omega_a);
    spec.G = s.range("G", spec.G);
    spec.N_a = s.range("N_a", spec.N_a);
    spec.N_b = s.range("N_b", spec.N_b);
    spec.kappa_a = s.scalar("kappa_a", spec.kappa_a);
    spec.kappa_b = s.scalar("kappa_b", spec.kappa_b);
    spec.count = s.unsigned_integer("count", spec.count);
    spec.seed = s.unsigned_integer("seed", spec.seed);
    try {
        spec.validate();
    }
    catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const auto points = sample_steady_states(spec, options.workers);

    RunResult result;
    result.metadata = base_metadata(Command::random, options);
    std::size_t stable = 0, entangled = 0;
    result.table.columns = schema(Command::random);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        stable += p.stable;
        entangled += p.entangled;
        const auto v = [&](double x) { return Cell{p.stable ? x : kNaN}; };
        const std::string label = !p.stable ? "unstable" : p.entangled ? "entangled" : "separable";
        result.table.add_row({static_cast<long long>(i), p.params.omega_a, p.params.G, p.params.N_a,
                              p.params.N_b, p.stable, v(p.pi_s), v(p.mutual_info), v(p.discord),
                              v(p.log_neg), p.entangled, label});
    }
    auto range_text = [](const Range& r) { return num(r.lo) + ":" + num(r.hi); };
    result.metadata.insert(result.metadata.end(), {
        {"generator", sampler_algorithm()},
        {"seed", std::to_string(spec.seed)},
        {"count", std::to_string(spec.count)},
        {"omega_a", range_text(spec.omega_a)},
        {"G", range_text(spec.G)},
        {"N_a", range_text(spec.N_a)},
        {"N_b", range_text(spec.N_b)},
        {"kappa_a", num(spec.kappa_a)},
        {"kappa_b", num(spec.kappa_b)},
        {"stable_count", std::to_string(stable)},
        {"entangled_count", std::to_string(entangled)},
    });

    const auto n_bound = s.unsigned_integer("bound_points", 401);
    if (n_bound > 0) {
        if (n_bound < 2) throw UsageError("bound_points must be 0 (disabled) or at least 2");
        const double g_max = s.scalar("bound_G_max", spec.G.hi);
        const double n_max = s.scalar("N_max", std::max(spec.N_a.hi, spec.N_b.hi));
        Table bounds;
        bounds.columns = bounds_schema();
        std::vector<BoundCurve> curves = bound_curves(BoundKind::mutual_info, spec.kappa_a, spec.kappa_b,
                                                      g_max, n_bound, n_max);
        curves.push_back(bound_curve(BoundKind::discord, BoundRole::upper, spec.kappa_a, spec.kappa_b, g_max,
                                     n_bound, n_max));
        for (const auto& curve : curves) {
            const std::string name =
                to_string(curve.kind) + (curve.role == BoundRole::upper ? "_upper" : "_lower");
            for (const auto& bp : curve.points) {
                bounds.add_row({name, bp.G, bp.pi_s, bp.value});
            }
            result.metadata.emplace_back(name + "_G_stop",
                                         num(curve.G_stop) + (curve.truncated ? " (stability edge)" : ""));
        }
        result.metadata.emplace_back("mutual_info_lower_asymptote",
                                     num(asymptotic_min_mutual_info(spec.kappa_a, spec.kappa_b)));
        result.extra = std::move(bounds);
        result.extra_suffix = "bounds";
    }
    return result;
}

RunResult run_optomech(const ConfigFile& config, const RunOptions& options)
{
    struct Job {
        std::string series;
        OptomechConfig cfg;
        double margin;
    };
    std::vector<Job> jobs;
    for (const auto& s : expand_series(config)) {
        s.require_known(kOptomechKeys);
        const OptomechConfig defaults;
        const auto grid = cartesian({
            s.values("Delta", defaults.Delta),
            s.values("g", defaults.g),
            s.values("kappa", defaults.kappa),
            s.values("gamma_m", defaults.gamma_m),
            s.values("N", defaults.N),
        });
        const double margin = margin_of(s);
        for (const auto& x : grid) {
            OptomechConfig c{x[0], x[1], x[2], x[3], x[4]};
            c.validate();
            jobs.push_back({s.series(), c, margin});
        }
    }

    std::vector<RegimeRecord> records(jobs.size());
    parallel_for(jobs.size(), options.workers, [&](std::size_t i) {
        records[i] = regime_record(jobs[i].cfg, jobs[i].margin);
    });

    RunResult result;
    result.metadata = base_metadata(Command::optomech, options);
    result.metadata.emplace_back("mapping", "omega_a=Delta, omega_b=1, G=2g, kappa_a=kappa, kappa_b=gamma_m, N_a=0, N_b=N");
    result.metadata.emplace_back("points", std::to_string(jobs.size()));
    result.table.columns = schema(Command::optomech);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto& c = jobs[i].cfg;
        const auto& r = records[i];
        const auto v = [&](double x) { return Cell{r.stable ? x : kNaN}; };
        const double coop = c.N > 0.0 ? cooperativity(c) : kNaN;
        result.table.add_row({jobs[i].series, c.Delta, c.g, c.kappa, c.gamma_m, c.N, 2.0 * c.g, r.stable,
                              v(r.mu_a), v(r.mu_b), v(r.pi_s), pi_small_g_expansion(c), v(r.mutual_info),
                              v(r.discord), v(r.log_neg), coop, to_string(r.regime)});
    }
    return result;
}

RunResult run_trajectory(const ConfigFile& config, const RunOptions& options)
{
    if (!config.series.empty()) {
        throw UsageError("trajectory does not support [series] blocks");
    }
    const Settings s("default", config.base);
    s.require_known(kTrajectoryKeys);

    OscillatorParams p;
    p.omega_a = s.scalar("omega_a", p.omega_a);
    p.G = s.scalar("G", p.G);
    p.kappa_a = s.scalar("kappa_a", p.kappa_a);
    p.kappa_b = s.scalar("kappa_b", p.kappa_b);
    p.N_a = s.scalar("N_a", p.N_a);
    p.N_b = s.scalar("N_b", p.N_b);
    p.validate();

    const Mat4 drift = build_drift(p);
    const Mat4 diffusion = build_diffusion(p);
    const double t_final = s.scalar("t_final", 50.0 / std::min(p.kappa_a, p.kappa_b));
    if (!(t_final > 0.0)) throw UsageError("t_final must be positive");
    double dt = s.scalar("dt", 0.0);
    if (dt < 0.0) throw UsageError("dt must be non-negative (0 selects the default step)");
    if (dt == 0.0) dt = default_time_step(drift);

    const std::string initial = s.text("initial", "thermal");
    std::optional<CovarianceMatrix> sigma0;
    std::optional<double> pi_stationary;
    if (check_stability(drift).stable) {
        pi_stationary = stationary_entropy_production(p).pi_s;
    }
    if (initial == "thermal") {
        const double na = s.scalar("init_N_a", p.N_a);
        const double nb = s.scalar("init_N_b", p.N_b);
        if (na < 0.0 || nb < 0.0) {
            throw UsageError("initial thermal occupations must be non-negative");
        }
        sigma0 = CovarianceMatrix::thermal(na, nb);
    }
    else if (initial == "steady") {
        if (!pi_stationary) throw UsageError("initial = steady requires stable parameters");
        sigma0 = lyapunov_steady_state(drift, diffusion);
    }
    else {
        throw UsageError("initial must be thermal or steady, got '" + initial + "'");
    }

    const auto steps = static_cast<std::uint64_t>(std::ceil(t_final / dt - 1e-12));
    const std::uint64_t stride = s.unsigned_integer("stride", std::max<std::uint64_t>(1, steps / 1000));
    if (stride == 0) throw UsageError("stride must be at least 1");

    const auto trajectory = integrate_covariance(*sigma0, drift, diffusion, t_final, {dt, stride});

    RunResult result;
    result.metadata = base_metadata(Command::trajectory, options);
    std::ostringstream params;
    params << "omega_a=" << num(p.omega_a) << " G=" << num(p.G) << " kappa_a=" << num(p.kappa_a)
           << " kappa_b=" << num(p.kappa_b) << " N_a=" << num(p.N_a) << " N_b=" << num(p.N_b);
    result.metadata.insert(result.metadata.end(), {
        {"params", params.str()},
        {"initial", initial},
        {"t_final", num(t_final)},
        {"dt", num(t_final / static_cast<double>(std::max<std::uint64_t>(steps, 1)))},
        {"stride", std::to_string(stride)},
        {"pi_stationary", pi_stationary ? num(*pi_stationary) : "none (unstable)"},
    });
    result.table.columns = schema(Command::trajectory);
    for (const auto& point : trajectory) {
        const auto rates = entropy_rates(point.sigma, p);
        result.table.add_row({point.time, wigner_shannon_entropy(point.sigma), rates.entropy_rate, rates.flux,
                              rates.production, rates.entropy_rate - rates.flux - rates.production});
    }
    return result;
}

RunResult run_command(Command command, const ConfigFile& config, const RunOptions& options)
{
    switch (command) {
    case Command::sweep: return run_sweep(config, options);
    case Command::random: return run_random(config, options);
    case Command::optomech: return run_optomech(config, options);
    case Command::trajectory: return run_trajectory(config, options);
    }
    throw UsageError("unknown command");
}

} // namespace ness::cli
