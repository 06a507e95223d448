// acceptance.cpp - End-to-end acceptance checks, one verdict line per criterion
//
// A criterion whose failure matches a documented limitation prints FAIL with a
// [known: ...] tag and leaves the exit status alone. Any other failure exits with 1.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <cli/app.hpp>
#include <ness/ness.hpp>

using namespace ness;

namespace {

struct Verdict {
    bool pass{false};
    std::string detail;
    // Set when the failure is the documented one; anything else stays unexpected.
    std::string known_reason;
};

std::string fmt(const char* f, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

OscillatorParams params(double wa, double g, double ka, double kb, double na = 0.0, double nb = 0.0)
{
    OscillatorParams p;
    p.omega_a = wa;
    p.G = g;
    p.kappa_a = ka;
    p.kappa_b = kb;
    p.N_a = na;
    p.N_b = nb;
    return p;
}

SampleSpec figure6_spec()
{
    SampleSpec spec;
    spec.seed = 20190501;
    spec.count = 10000;
    return spec;
}

std::vector<OscillatorParams> stable_draws(std::size_t wanted)
{
    auto spec = figure6_spec();
    spec.count = 2 * wanted;
    std::vector<OscillatorParams> out;
    for (const auto& p : sample_steady_states(spec)) {
        if (p.stable) out.push_back(p.params);
        if (out.size() == wanted) break;
    }
    return out;
}

double rel(double x, double ref)
{
    return std::abs(x - ref) / std::max(std::abs(ref), 1e-300);
}

Verdict three_way_agreement()
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto draws = stable_draws(1000);
    double worst = 0.0;
    for (const auto& p : draws) {
        const auto s = lyapunov_steady_state(p);
        const double diag = entropy_production_diagonal(s, p).pi_s;
        const double off = entropy_production_offdiagonal(s, p).pi_s;
        const double trace = entropy_production_trace(s, p);
        if (diag == 0.0) continue;
        worst = std::max({worst, rel(off, diag), rel(trace, diag)});
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Verdict v;
    v.pass = draws.size() == 1000 && worst <= 1e-9 && seconds < 10.0;
    v.detail = std::to_string(draws.size()) + " stable sets, max rel diff " + fmt("%.2e", worst) + ", "
               + fmt("%.2f", seconds) + " s";
    return v;
}

Verdict closed_forms()
{
    double worst_pi = 0.0, worst_i = 0.0;
    int points = 0;
    for (double ka : {0.05, 0.1, 0.2, 0.5, 1.0}) {
        for (double kb : {0.05, 0.1, 0.2, 0.5, 1.0}) {
            for (double g : {0.01, 0.05, 0.1, 0.3, 0.6, 0.9, 1.2}) {
                for (double n : {0.0, 2.0}) {
                    const auto p = params(1.0, g, ka, kb, n, n);
                    if (!is_stable(build_drift(p), kDefaultStabilityMargin)) continue;
                    const auto s = lyapunov_steady_state(p);
                    worst_pi = std::max(worst_pi, rel(identical_oscillators_pi(ka, kb, g), stationary_entropy_production(p).pi_s));
                    if (ka == kb) {
                        worst_i = std::max(worst_i, rel(identical_oscillators_mutual_info(ka, g), mutual_information(s)));
                    }
                    ++points;
                }
            }
        }
    }
    const double value = identical_oscillators_pi(0.2, 0.2, 0.1);
    Verdict v;
    v.pass = worst_pi <= 1e-9 && worst_i <= 1e-9 && std::abs(value - 1.9410e-3) <= 1e-7;
    v.detail = std::to_string(points) + " grid points, Pi rel " + fmt("%.2e", worst_pi) + ", I rel " + fmt("%.2e", worst_i)
               + ", Pi(0.2, 0.1) = " + fmt("%.6e", value);
    return v;
}

Verdict rate_balance()
{
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0, min_pi = std::numeric_limits<double>::infinity();
    int runs = 0;
    while (runs < 10) {
        const auto p = params(3.0 * u(gen), 2.0 * u(gen), 0.5, 1.0, 10.0 * u(gen), 10.0 * u(gen));
        const Mat4 a = build_drift(p);
        if (!is_stable(a, kDefaultStabilityMargin)) continue;
        const auto s0 = CovarianceMatrix::thermal(10.0 * u(gen), 10.0 * u(gen));
        const auto traj = integrate_covariance(s0, a, build_diffusion(p), 40.0, {0.0, 5});
        for (const auto& pt : traj) {
            const auto r = entropy_rates(pt.sigma, p);
            worst = std::max(worst, std::abs(r.entropy_rate - r.flux - r.production));
            min_pi = std::min(min_pi, r.production);
        }
        ++runs;
    }
    Verdict v;
    v.pass = worst <= 1e-8 && min_pi >= -1e-10;
    v.detail = "10 trajectories, max |dS/dt - Phi - Pi| " + fmt("%.2e", worst) + ", min Pi " + fmt("%.2e", min_pi);
    return v;
}

Verdict small_coupling()
{
    bool ok = true;
    double lo = 1e300, hi = 0.0;
    for (double n : {0.0, 1.0, 4.0}) {
        std::vector<double> err_i, err_d;
        for (double g : {0.04, 0.02, 0.01}) {
            const auto p = params(1.0, g, 0.2, 0.2, n, n);
            const auto s = lyapunov_steady_state(p);
            const double pi = stationary_entropy_production(p).pi_s;
            const double kt = p.kappa_a + p.kappa_b;
            err_i.push_back(std::abs(mutual_information(s) - pi / (2.0 * kt)));
            err_d.push_back(std::abs(discord_closed_form(s) - pi / (4.0 * kt * (n + 1.0))));
        }
        for (const auto* e : {&err_i, &err_d}) {
            for (std::size_t k = 1; k < e->size(); ++k) {
                const double ratio = (*e)[k - 1] / (*e)[k];
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
                ok = ok && std::abs(ratio - 16.0) <= 4.0;
            }
        }
    }
    Verdict v;
    v.pass = ok;
    v.detail = "halving ratios for I and D at N in {0,1,4} within [" + fmt("%.2f", lo) + ", " + fmt("%.2f", hi) + "]";
    return v;
}

Verdict n_independence()
{
    const auto ref = params(0.8, 0.4, 0.2, 0.5);
    const double pi0 = stationary_entropy_production(ref).pi_s;
    const double i0 = mutual_information(lyapunov_steady_state(ref));
    double worst = 0.0;
    for (double n : {1.0, 10.0}) {
        const auto p = params(0.8, 0.4, 0.2, 0.5, n, n);
        worst = std::max({worst, rel(stationary_entropy_production(p).pi_s, pi0),
                          rel(mutual_information(lyapunov_steady_state(p)), i0)});
    }
    const double d0 = discord_closed_form(lyapunov_steady_state(ref));
    const double d5 = discord_closed_form(lyapunov_steady_state(params(0.8, 0.4, 0.2, 0.5, 5.0, 5.0)));
    Verdict v;
    v.pass = worst <= 1e-9 && std::abs(d0 - d5) > 1e-6;
    v.detail = "Pi, I rel spread " + fmt("%.2e", worst) + "; |D(N=0) - D(N=5)| = " + fmt("%.3e", std::abs(d0 - d5));
    return v;
}

Verdict discord_oracle()
{
    const auto draws = stable_draws(1000);
    double worst = 0.0;
    int homodyne = 0, general = 0;
    for (const auto& p : draws) {
        const auto s = lyapunov_steady_state(p);
        const auto closed = discord_invariant_form(s);
        const auto numeric = discord_numeric(s);
        worst = std::max(worst, std::abs(closed.value - numeric.value));
        (closed.branch == DiscordBranch::homodyne ? homodyne : general) += 1;
    }
    Verdict v;
    v.pass = draws.size() == 1000 && worst <= 1e-7 && homodyne >= 50 && general >= 50;
    v.detail = std::to_string(draws.size()) + " states, max |closed - numeric| " + fmt("%.2e", worst) + ", branches "
               + std::to_string(homodyne) + " homodyne / " + std::to_string(general) + " general";
    return v;
}

struct Violations {
    int count{0};
    double worst{0.0};
    int uncovered{0};
    std::vector<const SamplePoint*> points;
};

Verdict bounds()
{
    const auto spec = figure6_spec();
    const auto pts = sample_steady_states(spec);
    const double g_max = spec.G.hi;
    const std::size_t n_curve = 4001;
    const auto mi = bound_curves(BoundKind::mutual_info, spec.kappa_a, spec.kappa_b, g_max, n_curve, spec.N_a.hi);
    const auto dc = bound_curves(BoundKind::discord, spec.kappa_a, spec.kappa_b, g_max, n_curve, spec.N_a.hi);

    auto check = [&](const BoundCurve& curve, bool upper, auto value_of) {
        Violations v;
        for (const auto& p : pts) {
            if (!p.stable) continue;
            double bound = curve.interpolate(p.pi_s);
            if (std::isnan(bound)) bound = bound_value_at(curve, p.pi_s);
            if (std::isnan(bound)) {
                ++v.uncovered;
                continue;
            }
            const double excess = upper ? value_of(p) - bound : bound - value_of(p);
            if (excess > 1e-6) {
                ++v.count;
                v.worst = std::max(v.worst, excess);
                v.points.push_back(&p);
            }
        }
        return v;
    };
    const auto mi_of = [](const SamplePoint& p) { return p.mutual_info; };
    const auto d_of = [](const SamplePoint& p) { return p.discord; };
    const auto mi_up = check(mi[0], true, mi_of);
    const auto mi_lo = check(mi[1], false, mi_of);
    const auto d_up = check(dc[0], true, d_of);

    const double asym = asymptotic_min_mutual_info(spec.kappa_a, spec.kappa_b);
    auto far = bound_configuration(BoundKind::mutual_info, BoundRole::lower, spec.kappa_a, spec.kappa_b, spec.N_a.hi);
    far.G = 1e3;
    const double direct = mutual_information(lyapunov_steady_state(far));
    const bool asym_ok = std::abs(asym - 0.5 * std::log(20.625)) <= 1e-3 && std::abs(direct - asym) <= 1e-3;

    // Upper-curve violations count as genuine only if the optimizer confirms the discord.
    bool confirmed = true;
    for (const auto* p : d_up.points) {
        const double numeric = discord_numeric(lyapunov_steady_state(p->params)).value;
        confirmed = confirmed && std::abs(numeric - p->discord) <= 1e-7;
    }

    Verdict v;
    v.pass = mi_up.count == 0 && mi_lo.count == 0 && d_up.count == 0 && asym_ok;
    std::ostringstream os;
    os << "violations > 1e-6: I upper " << mi_up.count << " (max " << fmt("%.2e", mi_up.worst) << "), I lower "
       << mi_lo.count << ", D upper " << d_up.count << " (max " << fmt("%.2e", d_up.worst) << "); beyond curve range "
       << mi_up.uncovered << "/" << mi_lo.uncovered << "/" << d_up.uncovered << "; I_min = " << fmt("%.6f", asym)
       << ", I(G=1e3) = " << fmt("%.6f", direct);
    v.detail = os.str();
    if (!v.pass && mi_lo.count == 0 && asym_ok && confirmed) {
        v.known_reason = "the upper curves are not envelopes: stable states with omega_a != 1 (I) or near the "
                         "stability edge (D) lie above them";
    }
    return v;
}

// Grid point with the largest finite value.
template <typename F>
double argmax_over(const std::vector<double>& grid, F&& value)
{
    double best = -std::numeric_limits<double>::infinity(), arg = std::nan("");
    for (double x : grid) {
        const double y = value(x);
        if (std::isfinite(y) && y > best) {
            best = y;
            arg = x;
        }
    }
    return arg;
}

std::vector<double> linspace(double a, double b, int n)
{
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1);
    return out;
}

double stable_pi(const OscillatorParams& p)
{
    if (!is_stable(build_drift(p), kDefaultStabilityMargin)) return std::nan("");
    return stationary_entropy_production(p).pi_s;
}

Verdict figure_features()
{
    std::vector<std::string> failed;
    std::ostringstream os;

    // Production rate against omega_a with a hot second bath: resonance at omega_a = 1
    // for equal damping. Unequal damping and cold baths are reported for reference.
    const auto w = linspace(0.0, 3.0, 301);
    const double fig2 = argmax_over(w, [&](double x) { return stable_pi(params(x, 0.1, 0.2, 0.2, 0.0, 100.0)); });
    const double fig2_dashed = argmax_over(w, [&](double x) { return stable_pi(params(x, 0.1, 0.2, 0.5, 0.0, 100.0)); });
    const double fig2_cold = argmax_over(w, [&](double x) { return stable_pi(params(x, 0.1, 0.2, 0.2)); });
    os << "fig2 peak " << fmt("%.2f", fig2) << " (kappa_b = 0.5: " << fmt("%.2f", fig2_dashed)
       << ", N_b = 0: " << fmt("%.2f", fig2_cold) << "); ";
    if (std::abs(fig2 - 1.0) > 0.01 + 1e-12) failed.push_back("fig2");

    // Minimum over N_b / N_a at equal temperatures.
    const auto ratio = linspace(0.0, 4.0, 401);
    bool fig3 = true;
    for (double g : {0.05, 0.2}) {
        const double arg = argmax_over(ratio, [&](double r) { return -stable_pi(params(1.0, g, 0.2, 0.5, 10.0, 10.0 * r)); });
        fig3 = fig3 && std::abs(arg - 1.0) <= 0.01 + 1e-12;
        os << "fig3 min " << fmt("%.2f", arg) << "; ";
    }
    if (!fig3) failed.push_back("fig3");

    // Hybridized normal modes give a second maximum at strong coupling.
    const auto w5 = linspace(0.0, 3.0, 601);
    std::vector<double> pis;
    for (double x : w5) pis.push_back(stable_pi(params(x, 0.6, 0.2, 0.2, 0.0, 10.0)));
    int peaks = 0;
    for (std::size_t i = 1; i + 1 < pis.size(); ++i) {
        if (std::isfinite(pis[i - 1]) && std::isfinite(pis[i + 1]) && pis[i] > pis[i - 1] && pis[i] > pis[i + 1]) ++peaks;
    }
    os << "fig5d peaks " << peaks << "; ";
    if (peaks < 2) failed.push_back("fig5d");

    // Optomechanical detuning sweep.
    OptomechConfig cfg;
    const auto deltas = linspace(-3.0, 3.0, 601);
    const auto recs = regime_report(cfg, deltas, 0);
    double min_mu = 0.0, arg_mu = std::nan(""), peak = 0.0;
    bool has_pos = false, has_neg = false;
    for (const auto& r : recs) {
        if (!r.stable) continue;
        has_pos = has_pos || r.mu_b > 0.0;
        has_neg = has_neg || r.mu_b < 0.0;
        if (r.mu_b < min_mu) {
            min_mu = r.mu_b;
            arg_mu = r.config.Delta;
        }
        peak = std::max(peak, r.pi_s);
    }
    const bool fig8_sign = has_pos && has_neg && std::abs(arg_mu - 1.0) <= 0.01 + 1e-12;
    os << "fig8 mu_b min at " << fmt("%.2f", arg_mu) << "; ";
    if (!fig8_sign) failed.push_back("fig8 sign");
    double tail = 0.0;
    for (double d : {-20.0, 20.0}) {
        auto c = cfg;
        c.Delta = d;
        const auto r = regime_record(c);
        tail = std::max(tail, r.stable ? r.pi_s / peak : std::numeric_limits<double>::infinity());
    }
    os << "fig8 tail " << fmt("%.2e", tail) << "; ";
    if (!(tail < 1e-6)) failed.push_back("fig8 tail");

    // Thermal noise on b removes all entanglement at G = 0.6.
    double max_en = 0.0;
    for (double x : w) {
        const auto p = params(x, 0.6, 0.2, 0.5, 0.0, 1.0);
        if (is_stable(build_drift(p), kDefaultStabilityMargin)) {
            max_en = std::max(max_en, log_negativity(lyapunov_steady_state(p)));
        }
    }
    os << "fig4c max E_N " << fmt("%.1e", max_en);
    if (max_en != 0.0) failed.push_back("fig4c");

    Verdict v;
    v.pass = failed.empty();
    v.detail = os.str();
    if (failed.size() == 1 && failed.front() == "fig8 tail") {
        v.known_reason = "Pi_s at |Delta| = 20 is about 3e-6 of the peak; the 1/Delta^2 decay is too slow for 1e-6";
    }
    return v;
}

Verdict optomech_expansion()
{
    double worst = 0.0;
    int unstable = 0, total = 0;
    for (double g : {0.001, 0.005}) {
        for (double gamma : {1e-6}) {
            for (double d : linspace(-3.0, 3.0, 121)) {
                OptomechConfig cfg;
                cfg.Delta = d;
                cfg.g = g;
                cfg.gamma_m = gamma;
                ++total;
                // Strict stability: the default margin is comparable to gamma_m here.
                const auto r = regime_record(cfg, 0.0);
                if (!r.stable) {
                    ++unstable;
                    continue;
                }
                worst = std::max(worst, rel(pi_small_g_expansion(cfg), r.pi_s));
            }
        }
    }
    Verdict v;
    v.pass = unstable == 0 && worst <= 0.02;
    v.detail = std::to_string(total) + " points, " + std::to_string(unstable) + " unstable, max rel deviation "
               + fmt("%.2e", worst);
    if (!v.pass) {
        v.known_reason = "the expansion needs G^2 << kappa gamma_m, violated at gamma_m = 1e-6";
    }
    return v;
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Verdict determinism()
{
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ness_acceptance_determinism";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::vector<std::string> base{"random", "--seed", "20190501", "-s", "count=2000", "-s", "bound_points=101"};

    std::vector<std::string> outputs;
    for (const char* workers : {"1", "4", "0"}) {
        auto args = base;
        const fs::path out = dir / (std::string("run_") + workers + ".csv");
        args.insert(args.end(), {"-j", workers, "-o", out.string()});
        std::ostringstream sink, err;
        if (cli::run_app(args, sink, err) != cli::kExitOk) return {false, "run failed: " + err.str(), ""};
        outputs.push_back(slurp(out) + slurp(dir / (std::string("run_") + workers + ".bounds.csv")));
    }
#ifdef NESS_EXECUTABLE
    for (int k = 0; k < 2; ++k) {
        const fs::path out = dir / ("proc_" + std::to_string(k) + ".csv");
        std::string cmd = std::string("\"") + NESS_EXECUTABLE + "\"";
        for (const auto& a : base) cmd += " " + a;
        cmd += " -o \"" + out.string() + "\"";
        if (std::system(cmd.c_str()) != 0) return {false, "process run failed", ""};
        outputs.push_back(slurp(out) + slurp(dir / ("proc_" + std::to_string(k) + ".bounds.csv")));
    }
#endif
    fs::remove_all(dir);
    const bool same = std::all_of(outputs.begin(), outputs.end(), [&](const std::string& s) { return s == outputs.front(); });
    Verdict v;
    v.pass = same && outputs.front().size() > 1000;
    v.detail = std::to_string(outputs.size()) + " runs (in-process with 1/4/auto workers, separate processes), "
               + std::to_string(outputs.front().size()) + " bytes, " + (same ? "identical" : "DIFFERENT");
    return v;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"three-way production agreement", three_way_agreement},
        {"closed-form checks", closed_forms},
        {"rate balance", rate_balance},
        {"small-G proportionality", small_coupling},
        {"N-independence", n_independence},
        {"discord oracle", discord_oracle},
        {"random-state bounds", bounds},
        {"qualitative figure features", figure_features},
        {"optomechanical expansion", optomech_expansion},
        {"determinism", determinism},
    };

    int unexpected = 0, known = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        }
        catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what(), ""};
        }
        std::string tag;
        if (!v.pass && !v.known_reason.empty()) {
            tag = " [known: " + v.known_reason + "]";
            ++known;
        }
        else if (!v.pass) {
            ++unexpected;
        }
        std::printf("%2zu %-30s %s - %s%s\n", i + 1, criteria[i].first.c_str(), v.pass ? "PASS" : "FAIL",
                    v.detail.c_str(), tag.c_str());
    }
    std::printf("%d unexpected failure(s), %d known failure(s)\n", unexpected, known);
    return unexpected == 0 ? 0 : 1;
}
