// dynamics.cpp - Drift/diffusion construction, Lyapunov solve and RK4 covariance integration

#include "ness/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace ness {

Mat4 build_drift(const OscillatorParams& params)
{
    params.validate();
    Mat4 a = Mat4::Zero();
    a(0, 0) = -params.kappa_a;
    a(0, 1) = params.omega_a;
    a(1, 0) = -params.omega_a;
    a(1, 1) = -params.kappa_a;
    a(1, 2) = params.G;
    a(2, 2) = -params.kappa_b;
    a(2, 3) = params.omega_b;
    a(3, 0) = params.G;
    a(3, 2) = -params.omega_b;
    a(3, 3) = -params.kappa_b;
    return a;
}

Mat4 build_diffusion(const OscillatorParams& params)
{
    params.validate();
    const double da = (1.0 + 2.0 * params.N_a) * params.kappa_a;
    const double db = (1.0 + 2.0 * params.N_b) * params.kappa_b;
    return Eigen::Vector4d(da, da, db, db).asDiagonal();
}

StabilityReport check_stability(const Mat4& drift, double margin)
{
    require_finite(drift, "drift matrix");
    Eigen::EigenSolver<Mat4> solver(drift, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigenvalue iteration for the drift matrix did not converge");
    }
    const double max_re = solver.eigenvalues().real().maxCoeff();
    return {max_re < -margin, max_re};
}

namespace {

// Upper-triangle index pairs of a symmetric 4x4 matrix; the 10 unknowns of the Lyapunov system.
constexpr std::array<std::array<int, 2>, 10> kPairs{{
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3},
}};

constexpr int pair_index(int i, int j)
{
    if (i > j) std::swap(i, j);
    // Row offsets into kPairs: 0, 4, 7, 9.
    constexpr std::array<int, 4> offset{0, 4, 7, 9};
    return offset[i] + (j - i);
}

} // namespace

CovarianceMatrix lyapunov_steady_state(const Mat4& drift, const Mat4& diffusion)
{
    require_finite(drift, "drift matrix");
    require_finite(diffusion, "diffusion matrix");
    const auto stability = check_stability(drift);
    if (!stability.stable) {
        std::ostringstream os;
        os << "no stationary state: drift matrix has eigenvalue with real part "
           << stability.max_real_part;
        throw UnstableSystemError(os.str());
    }

    // Row (i,j) of (A S + S A^T)_ij = sum_k A_ik S_kj + S_ik A_jk, with S_kj read
    // through the symmetric pair index.
    Eigen::Matrix<double, 10, 10> m = Eigen::Matrix<double, 10, 10>::Zero();
    Eigen::Matrix<double, 10, 1> rhs;
    for (int row = 0; row < 10; ++row) {
        const int i = kPairs[row][0];
        const int j = kPairs[row][1];
        for (int k = 0; k < 4; ++k) {
            m(row, pair_index(k, j)) += drift(i, k);
            m(row, pair_index(i, k)) += drift(j, k);
        }
        rhs(row) = -0.5 * (diffusion(i, j) + diffusion(j, i));
    }

    // Every lambda_i + lambda_j has negative real part once A is stable, so the operator
    // is invertible even when its pivots span many decades (large G). Partial pivoting
    // never truncates small pivots; one refinement step recovers the lost digits.
    const Eigen::PartialPivLU<Eigen::Matrix<double, 10, 10>> lu(m);
    Eigen::Matrix<double, 10, 1> x = lu.solve(rhs);
    x += lu.solve(Eigen::Matrix<double, 10, 1>(rhs - m * x));

    Mat4 sigma;
    for (int row = 0; row < 10; ++row) {
        const int i = kPairs[row][0];
        const int j = kPairs[row][1];
        sigma(i, j) = x(row);
        sigma(j, i) = x(row);
    }
    if (!sigma.allFinite()) {
        throw NumericalError("Lyapunov solve produced non-finite entries");
    }
    try {
        return CovarianceMatrix(sigma);
    }
    catch (const std::invalid_argument& e) {
        std::ostringstream os;
        os << "Lyapunov solution is not a physical state (max real part " << stability.max_real_part
           << "): " << e.what();
        throw NumericalError(os.str());
    }
}

CovarianceMatrix lyapunov_steady_state(const OscillatorParams& params)
{
    return lyapunov_steady_state(build_drift(params), build_diffusion(params));
}

Mat4 covariance_derivative(const Mat4& drift, const Mat4& diffusion, const Mat4& sigma)
{
    return drift * sigma + sigma * drift.transpose() + diffusion;
}

double lyapunov_residual(const Mat4& drift, const Mat4& diffusion, const Mat4& sigma)
{
    return covariance_derivative(drift, diffusion, sigma).cwiseAbs().maxCoeff();
}

double default_time_step(const Mat4& drift)
{
    Eigen::EigenSolver<Mat4> solver(drift, false);
    const double radius = solver.eigenvalues().cwiseAbs().maxCoeff();
    return 0.02 / std::max(1.0, radius);
}

Trajectory integrate_covariance(const CovarianceMatrix& sigma0,
                                const Mat4& drift,
                                const Mat4& diffusion,
                                double t_final,
                                const IntegrationOptions& options)
{
    require_finite(drift, "drift matrix");
    require_finite(diffusion, "diffusion matrix");
    if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
        throw std::invalid_argument("t_final must be finite and non-negative");
    }
    const double dt_req = options.dt > 0.0 ? options.dt : default_time_step(drift);
    if (!std::isfinite(dt_req)) {
        throw std::invalid_argument("dt must be finite");
    }
    const std::size_t stride = std::max<std::size_t>(1, options.stride);
    const auto steps = static_cast<std::size_t>(std::ceil(t_final / dt_req - 1e-12));
    const double h = steps > 0 ? t_final / static_cast<double>(steps) : 0.0;

    auto rhs = [&](const Mat4& s) { return covariance_derivative(drift, diffusion, s); };

    Trajectory out;
    out.reserve(steps / stride + 2);
    out.push_back({0.0, sigma0});

    Mat4 s = sigma0.matrix();
    for (std::size_t n = 1; n <= steps; ++n) {
        const Mat4 k1 = rhs(s);
        const Mat4 k2 = rhs(s + 0.5 * h * k1);
        const Mat4 k3 = rhs(s + 0.5 * h * k2);
        const Mat4 k4 = rhs(s + h * k3);
        s += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        s = 0.5 * (s + s.transpose()).eval();
        if (!s.allFinite()) {
            std::ostringstream os;
            os << "covariance integration produced non-finite entries at step " << n;
            throw NumericalError(os.str());
        }
        if (n % stride == 0 || n == steps) {
            out.push_back({static_cast<double>(n) * h, CovarianceMatrix::trusted(s)});
        }
    }
    return out;
}

} // namespace ness
