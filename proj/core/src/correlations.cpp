// correlations.cpp - Entropies, mutual information and logarithmic negativity

#include "ness/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "blocks.hpp"

namespace ness {

std::string to_string(MeasuredMode mode)
{
    return mode == MeasuredMode::a ? "a" : "b";
}

SymplecticInvariants symplectic_invariants(const CovarianceMatrix& sigma)
{
    const auto blocks = detail::split(sigma.matrix());
    SymplecticInvariants inv;
    inv.I1 = blocks.a.determinant();
    inv.I2 = blocks.b.determinant();
    inv.I3 = blocks.c.determinant();
    inv.I4 = inv.I1 * inv.I2 + inv.I3 * inv.I3 - detail::cross_trace(blocks);
    return inv;
}

namespace {

double checked_log_det(const Mat2& sigma)
{
    if (!sigma.allFinite()) {
        throw std::invalid_argument("covariance matrix has non-finite entries");
    }
    const double det = sigma.determinant();
    if (!(sigma(0, 0) > 0.0) || !(det > 0.0)) {
        throw std::invalid_argument("single-mode covariance is not positive definite");
    }
    if (det < 0.25 * (1.0 - 1e-9)) {
        throw std::invalid_argument("single-mode covariance violates the uncertainty relation");
    }
    return std::log(det);
}

} // namespace

double renyi2_entropy(const Mat2& sigma)
{
    return 0.5 * checked_log_det(sigma) + std::numbers::ln2;
}

double renyi2_entropy(const CovarianceMatrix& sigma)
{
    const double det = sigma.matrix().determinant();
    if (!(det > 0.0)) {
        throw std::invalid_argument("covariance matrix is not positive definite");
    }
    return 0.5 * std::log(det) + 2.0 * std::numbers::ln2;
}

double wigner_shannon_entropy(const Mat2& sigma)
{
    return 0.5 * checked_log_det(sigma) + std::log(std::numbers::pi * std::numbers::e);
}

double wigner_shannon_entropy(const CovarianceMatrix& sigma)
{
    const double det = sigma.matrix().determinant();
    if (!(det > 0.0)) {
        throw std::invalid_argument("covariance matrix is not positive definite");
    }
    return 0.5 * std::log(det) + 2.0 * std::log(std::numbers::pi * std::numbers::e);
}

double mutual_information(const CovarianceMatrix& sigma)
{
    // I4 = I1 I2 + I3^2 - T, so I1 I2 / I4 = 1 / (1 + (I3^2 - T) / (I1 I2)).
    const auto blocks = detail::split(sigma.matrix());
    const double i1 = blocks.a.determinant();
    const double i2 = blocks.b.determinant();
    const double i3 = blocks.c.determinant();
    const double t = detail::cross_trace(blocks);
    const double x = (i3 * i3 - t) / (i1 * i2);
    if (!(x > -1.0)) {
        throw std::invalid_argument("covariance matrix is not positive definite");
    }
    return -0.5 * std::log1p(x);
}

double classical_correlations(const CovarianceMatrix& sigma, MeasuredMode measured)
{
    return mutual_information(sigma) - discord_closed_form(sigma, measured);
}

double partial_transpose_min_eigenvalue(const CovarianceMatrix& sigma)
{
    // Partial transposition flips the sign of p_b.
    const Eigen::Vector4d flip(1.0, 1.0, 1.0, -1.0);
    const Mat4 pt = flip.asDiagonal() * sigma.matrix() * flip.asDiagonal();
    return symplectic_eigenvalues(pt)[0];
}

double log_negativity(const CovarianceMatrix& sigma)
{
    return std::max(0.0, -std::log(2.0 * partial_transpose_min_eigenvalue(sigma)));
}

double identical_oscillators_mutual_info(double kappa, double G)
{
    if (!(kappa > 0.0) || !std::isfinite(G)) {
        throw std::invalid_argument("identical_oscillators_mutual_info: kappa must be positive, G finite");
    }
    const double k2 = kappa * kappa;
    const double kp = k2 + 1.0;
    const double km = k2 - 1.0;
    const double g2 = G * G;
    if (!(kp * kp - g2 > 0.0)) {
        throw UnstableSystemError("identical oscillators: coupling beyond the stability edge");
    }
    const double num = g2 * km + 2.0 * kp * kp;
    return 0.5 * std::log(4.0 * num * num
                          / ((kp * kp - g2) * (g2 * g2 + 8.0 * g2 * km + 16.0 * kp * kp)));
}

CorrelationReport correlation_report(const CovarianceMatrix& sigma)
{
    CorrelationReport r;
    r.invariants = symplectic_invariants(sigma);
    r.renyi2_I = mutual_information(sigma);
    r.discord_a_given_b = discord_closed_form(sigma, MeasuredMode::b);
    r.discord_b_given_a = discord_closed_form(sigma, MeasuredMode::a);
    r.classical_J = r.renyi2_I - r.discord_a_given_b;
    r.log_negativity = log_negativity(sigma);
    return r;
}

} // namespace ness
