// discord.cpp - Gaussian Renyi-2 discord: closed forms and direct optimization

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "blocks.hpp"
#include "ness/correlations.hpp"

namespace ness {

namespace {

constexpr double kDeadZone = 1e-12;

// Symmetric R with R R = x / sqrt(det x) and det R = 1.
Mat2 unit_sqrt(const Mat2& x)
{
    const Mat2 m = x / std::sqrt(x.determinant());
    return (m + Mat2::Identity()) / std::sqrt(m.trace() + 2.0);
}

// Image of the blocks under the local symplectic adj(R_a) (+) adj(R_b), which turns both
// diagonal blocks into multiples of the identity. Local invariants are unchanged; near
// the stability edge this removes most of the cancellation in the raw entries.
struct Normalized {
    detail::Blocks blocks;
    Mat2 root_a;
    Mat2 root_b;
};

Normalized normalize(const detail::Blocks& raw)
{
    Normalized n;
    n.root_a = unit_sqrt(raw.a);
    n.root_b = unit_sqrt(raw.b);
    n.blocks.a = std::sqrt(raw.a.determinant()) * Mat2::Identity();
    n.blocks.b = std::sqrt(raw.b.determinant()) * Mat2::Identity();
    n.blocks.c = detail::adjugate(n.root_a) * raw.c * detail::adjugate(n.root_b).transpose();
    return n;
}

// Reorders so that the measured mode sits in the b slot.
CovarianceMatrix oriented(const CovarianceMatrix& sigma, MeasuredMode measured)
{
    return measured == MeasuredMode::b ? sigma : sigma.swapped_modes();
}

// Square root of a symmetric positive 2x2 matrix with unit determinant.
Mat2 sqrt_unimodular(const Mat2& m)
{
    return (m + Mat2::Identity()) / std::sqrt(m.trace() + 2.0);
}

Mat2 rotation(double theta)
{
    Mat2 r;
    r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return r;
}

bool is_product(const detail::Blocks& s)
{
    return s.c.cwiseAbs().maxCoeff() == 0.0;
}

ClosedFormDiscord product_state_discord(double e_min)
{
    ClosedFormDiscord r;
    r.value = 0.0;
    r.e_min = e_min;
    r.branch = DiscordBranch::homodyne;
    return r;
}

} // namespace

std::string to_string(DiscordBranch branch)
{
    return branch == DiscordBranch::homodyne ? "homodyne" : "general";
}

bool GaussianMeasurement::is_homodyne() const
{
    return std::isinf(lam);
}

Mat2 GaussianMeasurement::seed_covariance() const
{
    if (is_homodyne()) {
        throw std::domain_error("homodyne measurement has no finite seed covariance");
    }
    if (!(lam > 0.0)) {
        throw std::invalid_argument("measurement squeezing must be positive");
    }
    const Mat2 r = rotation(theta);
    const Mat2 d = Eigen::Vector2d(0.5 * lam, 0.5 / lam).asDiagonal();
    return r * d * r.transpose();
}

StandardForm standard_form(const CovarianceMatrix& sigma)
{
    const auto s = detail::split(sigma.matrix());
    StandardForm f;
    f.a = std::sqrt(s.a.determinant());
    f.b = std::sqrt(s.b.determinant());
    // sigma_a = a S_a^2 with S_a symplectic; S^-1 = adj(S) for det S = 1.
    const Mat2 sa_inv = detail::adjugate(sqrt_unimodular(s.a / f.a));
    const Mat2 sb_inv = detail::adjugate(sqrt_unimodular(s.b / f.b));
    const Mat2 c = sa_inv * s.c * sb_inv;
    Eigen::JacobiSVD<Mat2> svd(c);
    const auto sv = svd.singularValues();
    f.c = sv(0);
    f.d = c.determinant() < 0.0 ? -sv(1) : sv(1);
    return f;
}

ClosedFormDiscord discord_closed_form_detail(const CovarianceMatrix& sigma, MeasuredMode measured)
{
    const CovarianceMatrix s = oriented(sigma, measured);
    const auto blocks = detail::split(s.matrix());
    if (is_product(blocks)) {
        return product_state_discord(blocks.a.determinant());
    }
    const auto f = standard_form(s);
    const double a = f.a, b = f.b, c = f.c, d = f.d;
    const double c2 = c * c, d2 = d * d, b2 = b * b;

    // Homodyne optimal iff f1 f2 < 0.
    const double f1p = 4.0 * a * b2 * d2, f1m = c2 * (a + 4.0 * b * d2);
    const double f2p = 4.0 * a * b2 * c2, f2m = d2 * (a + 4.0 * b * c2);
    const double cond = (f1p - f1m) * (f2p - f2m);
    const double scale = (f1p + f1m) * (f2p + f2m);

    const double e_homodyne = a * (a - c2 / b);
    auto e_general = [&] {
        const double g = 1.0 - 4.0 * b2;
        const double r = c2 * d2 * (a - 4.0 * a * b2 + 4.0 * b * c2) * (a - 4.0 * a * b2 + 4.0 * b * d2);
        return (a * a * g * g + 4.0 * a * b * g * (c2 + d2)
                + 4.0 * (std::sqrt(std::max(0.0, r)) + (4.0 * b2 + 1.0) * c2 * d2))
               / (g * g);
    };

    ClosedFormDiscord out;
    if (std::abs(cond) <= kDeadZone * scale) {
        out.in_dead_zone = true;
        const double eg = e_general();
        if (std::isfinite(eg) && eg < e_homodyne) {
            out.e_min = eg;
            out.branch = DiscordBranch::general;
        }
        else {
            out.e_min = e_homodyne;
            out.branch = DiscordBranch::homodyne;
        }
    }
    else if (cond < 0.0) {
        out.e_min = e_homodyne;
        out.branch = DiscordBranch::homodyne;
    }
    else {
        out.e_min = e_general();
        out.branch = DiscordBranch::general;
    }
    const double i4 = (a * b - c2) * (a * b - d2);
    out.value = 0.5 * std::log(b2 * out.e_min / i4);
    if (!std::isfinite(out.value)) {
        throw NumericalError("closed-form discord evaluated to a non-finite value");
    }
    return out;
}

double discord_closed_form(const CovarianceMatrix& sigma, MeasuredMode measured)
{
    return discord_closed_form_detail(sigma, measured).value;
}

ClosedFormDiscord discord_invariant_form(const CovarianceMatrix& sigma, MeasuredMode measured)
{
    const CovarianceMatrix s = oriented(sigma, measured);
    const auto blocks = detail::split(s.matrix());
    if (is_product(blocks)) {
        return product_state_discord(blocks.a.determinant());
    }
    const auto norm = normalize(blocks);
    const double i1 = blocks.a.determinant(), i2 = blocks.b.determinant();
    const double i3 = norm.blocks.c.determinant();
    // With I4 = I1 I2 + I3^2 - T every O(I1^2 I2^2) term cancels analytically, which
    // keeps the branch test and E - I1 accurate for weakly correlated states.
    const double t = detail::cross_trace(norm.blocks);
    const double gp = 1.0 + 4.0 * i2, gm = 1.0 - 4.0 * i2;
    const double i3sq = i3 * i3;
    const double inner = 16.0 * i2 * i3sq + 4.0 * gm * t;

    // Homodyne optimal iff 4 I4 (G+ I3^2 - I4) + I1 (G+ I3^2 + 8 I2 I4) < 4 I1^2 I2^2, i.e.
    // I3^2 (16 I2 I3^2 + I1 G+^2 + 4 G- T) < 4 T^2.
    const double cond = i3sq * (16.0 * i2 * i3sq + i1 * gp * gp + 4.0 * gm * t) - 4.0 * t * t;
    const double scale = i3sq * (16.0 * i2 * i3sq + i1 * gp * gp + 4.0 * std::abs(gm) * t) + 4.0 * t * t;

    // E - I1 on each branch.
    auto shift_homodyne = [&] {
        return -(t + std::sqrt(std::max(0.0, t * t - 4.0 * i1 * i2 * i3sq))) / (2.0 * i2);
    };
    auto shift_general = [&] {
        const double arg = i1 * gm * gm + inner;
        return (4.0 * gm * (t - i3sq) + 8.0 * i3sq + 4.0 * std::abs(i3) * std::sqrt(std::max(0.0, arg)))
               / (gm * gm);
    };

    ClosedFormDiscord out;
    double shift = 0.0;
    if (std::abs(cond) <= kDeadZone * scale) {
        out.in_dead_zone = true;
        const double sh = shift_homodyne();
        const double sg = shift_general();
        if (std::isfinite(sg) && sg < sh) {
            shift = sg;
            out.branch = DiscordBranch::general;
        }
        else {
            shift = sh;
            out.branch = DiscordBranch::homodyne;
        }
    }
    else if (cond < 0.0) {
        shift = shift_homodyne();
        out.branch = DiscordBranch::homodyne;
    }
    else {
        shift = shift_general();
        out.branch = DiscordBranch::general;
    }
    out.e_min = i1 + shift;
    // 1/2 ln(I2 E / I4) with I4 / (I1 I2) = 1 + (I3^2 - T) / (I1 I2).
    out.value = 0.5 * (std::log1p(shift / i1) - std::log1p((i3sq - t) / (i1 * i2)));
    if (!std::isfinite(out.value)) {
        throw NumericalError("invariant-form discord evaluated to a non-finite value");
    }
    return out;
}

Mat2 conditional_covariance(const CovarianceMatrix& sigma,
                            const GaussianMeasurement& measurement,
                            MeasuredMode measured)
{
    const auto s = detail::split(oriented(sigma, measured).matrix());
    if (measurement.is_homodyne()) {
        const Eigen::Vector2d w = rotation(measurement.theta) * Eigen::Vector2d(0.0, 1.0);
        const Eigen::Vector2d cw = s.c * w;
        return s.a - cw * cw.transpose() / w.dot(s.b * w);
    }
    const Mat2 m = s.b + measurement.seed_covariance();
    return s.a - s.c * m.inverse() * s.c.transpose();
}

namespace {

struct Objective {
    detail::Blocks s;
    double bound;

    double operator()(double theta, double log_lam) const
    {
        const double l = std::exp(std::clamp(log_lam, -bound, bound));
        const Mat2 r = rotation(theta);
        const Mat2 gamma = r * Eigen::Vector2d(0.5 * l, 0.5 / l).asDiagonal() * r.transpose();
        const Mat2 m = s.b + gamma;
        return (s.a - s.c * detail::adjugate(m) * s.c.transpose() / m.determinant()).determinant();
    }
};

struct SimplexResult {
    std::array<double, 2> x;
    double f;
    int iterations;
    bool converged;
};

// Nelder-Mead on two parameters with the standard coefficients (1, 2, 1/2, 1/2).
SimplexResult nelder_mead(const Objective& fn,
                          std::array<double, 2> x0,
                          std::array<double, 2> step,
                          int max_iter,
                          double tol)
{
    using Point = std::array<double, 2>;
    std::array<Point, 3> p{x0, Point{x0[0] + step[0], x0[1]}, Point{x0[0], x0[1] + step[1]}};
    std::array<double, 3> f{};
    for (int i = 0; i < 3; ++i) f[i] = fn(p[i][0], p[i][1]);

    auto lerp = [](const Point& from, const Point& to, double t) {
        return Point{from[0] + t * (to[0] - from[0]), from[1] + t * (to[1] - from[1])};
    };

    int iter = 0;
    for (; iter < max_iter; ++iter) {
        std::array<int, 3> idx{0, 1, 2};
        std::sort(idx.begin(), idx.end(), [&](int i, int j) { return f[i] < f[j]; });
        p = {p[idx[0]], p[idx[1]], p[idx[2]]};
        f = {f[idx[0]], f[idx[1]], f[idx[2]]};

        const double spread = std::abs(f[2] - f[0]);
        const double size = std::max({std::abs(p[1][0] - p[0][0]), std::abs(p[2][0] - p[0][0]),
                                      std::abs(p[1][1] - p[0][1]), std::abs(p[2][1] - p[0][1])});
        if ((spread <= tol * std::max(1.0, std::abs(f[0])) && size < 1e-7) || size < 1e-12) {
            return {p[0], f[0], iter, true};
        }

        const Point centroid{0.5 * (p[0][0] + p[1][0]), 0.5 * (p[0][1] + p[1][1])};
        const Point xr = lerp(p[2], centroid, 2.0);
        const double fr = fn(xr[0], xr[1]);
        if (fr < f[0]) {
            const Point xe = lerp(p[2], centroid, 3.0);
            const double fe = fn(xe[0], xe[1]);
            if (fe < fr) {
                p[2] = xe;
                f[2] = fe;
            }
            else {
                p[2] = xr;
                f[2] = fr;
            }
            continue;
        }
        if (fr < f[1]) {
            p[2] = xr;
            f[2] = fr;
            continue;
        }
        const bool outside = fr < f[2];
        const Point xc = outside ? lerp(p[2], centroid, 1.5) : lerp(p[2], centroid, 0.5);
        const double fc = fn(xc[0], xc[1]);
        if (fc < std::min(fr, f[2])) {
            p[2] = xc;
            f[2] = fc;
            continue;
        }
        for (int i = 1; i < 3; ++i) {
            p[i] = lerp(p[0], p[i], 0.5);
            f[i] = fn(p[i][0], p[i][1]);
        }
    }
    const auto best = std::min_element(f.begin(), f.end()) - f.begin();
    return {p[best], f[best], iter, false};
}

double wrap_angle(double theta)
{
    double t = std::fmod(theta, std::numbers::pi);
    if (t < 0.0) t += std::numbers::pi;
    return t;
}

} // namespace

NumericDiscord discord_numeric(const CovarianceMatrix& sigma,
                               MeasuredMode measured,
                               const NumericDiscordOptions& options)
{
    if (options.grid_theta < 2 || options.grid_log_lambda < 2 || !(options.log_lambda_bound > 0.0)) {
        throw std::invalid_argument("discord_numeric: grid needs at least 2x2 points and a positive bound");
    }
    const CovarianceMatrix s = oriented(sigma, measured);
    const auto raw = detail::split(s.matrix());
    const auto norm = normalize(raw);
    const auto& blocks = norm.blocks;
    const Mat2& root_b = norm.root_b;
    const Mat2 pb = detail::adjugate(root_b);
    const double i1 = raw.a.determinant(), i2 = raw.b.determinant();
    Mat4 normal;
    normal << blocks.a, blocks.c, blocks.c.transpose(), blocks.b;
    const double i4 = normal.determinant();
    const Objective fn{blocks, options.log_lambda_bound};

    // Coarse grid, keeping the best few cells as simplex seeds.
    struct Cell {
        double f, theta, log_lam;
    };
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(options.grid_theta) * options.grid_log_lambda);
    const double dtheta = std::numbers::pi / options.grid_theta;
    const double dl = 2.0 * options.log_lambda_bound / (options.grid_log_lambda - 1);
    for (int i = 0; i < options.grid_theta; ++i) {
        for (int j = 0; j < options.grid_log_lambda; ++j) {
            const double th = i * dtheta;
            const double ll = -options.log_lambda_bound + j * dl;
            cells.push_back({fn(th, ll), th, ll});
        }
    }
    const std::size_t seeds = std::min<std::size_t>(3, cells.size());
    std::partial_sort(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(seeds), cells.end(),
                      [](const Cell& x, const Cell& y) { return x.f < y.f; });

    NumericDiscord out;
    double best = std::numeric_limits<double>::infinity();
    bool any_converged = false;
    for (std::size_t k = 0; k < seeds; ++k) {
        const auto r = nelder_mead(fn, {cells[k].theta, cells[k].log_lam}, {0.5 * dtheta, 0.5 * dl},
                                   options.max_iterations, options.tolerance);
        out.iterations += r.iterations;
        any_converged = any_converged || r.converged;
        if (r.f < best) {
            best = r.f;
            // Seed in the original frame: gamma = R_b gamma' R_b^T.
            const double lam = std::exp(std::clamp(r.x[1], -options.log_lambda_bound, options.log_lambda_bound));
            const Mat2 seed = root_b * GaussianMeasurement{r.x[0], lam}.seed_covariance() * root_b.transpose();
            const Eigen::SelfAdjointEigenSolver<Mat2> es(0.5 * (seed + seed.transpose()));
            const Eigen::Vector2d major = es.eigenvectors().col(1);
            out.measurement.theta = wrap_angle(std::atan2(major(1), major(0)));
            out.measurement.lam = 2.0 * es.eigenvalues()(1);
        }
    }

    // Homodyne limit: det(a - c w w^T c^T / (w^T b w)) = I1 - (w^T M w) / (w^T b w),
    // M = c^T adj(a) c, maximized by the top generalized eigenvector of (M, b).
    const Mat2 m = blocks.c.transpose() * detail::adjugate(blocks.a) * blocks.c;
    Eigen::GeneralizedSelfAdjointEigenSolver<Mat2> ges(0.5 * (m + m.transpose()), blocks.b);
    if (ges.info() == Eigen::Success) {
        const double homodyne = i1 - ges.eigenvalues()(1);
        if (homodyne < best) {
            best = homodyne;
            // Quadrature w^T P_b x_b in the original frame, parallel to
            // R(theta) (0, 1)^T = (-sin theta, cos theta).
            const Eigen::Vector2d w = pb.transpose() * ges.eigenvectors().col(1);
            out.measurement.theta = wrap_angle(std::atan2(-w(0), w(1)));
            out.measurement.lam = std::numeric_limits<double>::infinity();
        }
    }

    out.conditional_det = best;
    out.value = 0.5 * std::log(i2 * best / i4);
    if (!any_converged || !std::isfinite(out.value)) {
        std::ostringstream os;
        os << "discord optimization did not converge (best value " << out.value << ")";
        throw DiscordOptimizationError(os.str(), out.value);
    }
    return out;
}

} // namespace ness
