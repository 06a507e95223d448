// types.cpp - Validation for parameters and covariance matrices

#include "ness/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace ness {

namespace {

bool finite(double x) { return std::isfinite(x); }

std::string describe(const OscillatorParams& p)
{
    std::ostringstream os;
    os << "(omega_a=" << p.omega_a << ", omega_b=" << p.omega_b << ", G=" << p.G
       << ", kappa_a=" << p.kappa_a << ", kappa_b=" << p.kappa_b << ", N_a=" << p.N_a
       << ", N_b=" << p.N_b << ")";
    return os.str();
}

} // namespace

void OscillatorParams::validate() const
{
    for (double x : {omega_a, omega_b, G, kappa_a, kappa_b, N_a, N_b}) {
        if (!finite(x)) {
            throw std::invalid_argument("non-finite oscillator parameter " + describe(*this));
        }
    }
    if (!(kappa_a > 0.0) || !(kappa_b > 0.0)) {
        throw std::invalid_argument("dissipation rates must be strictly positive " + describe(*this));
    }
    if (N_a < 0.0 || N_b < 0.0) {
        throw std::invalid_argument("bath occupations must be non-negative " + describe(*this));
    }
}

void OscillatorParams::require_rescaled() const
{
    validate();
    if (omega_b != 1.0) {
        throw std::invalid_argument("closed-form expressions require omega_b == 1 " + describe(*this));
    }
}

const Mat4& symplectic_form()
{
    static const Mat4 omega = [] {
        Mat4 m = Mat4::Zero();
        m(0, 1) = 1.0;
        m(1, 0) = -1.0;
        m(2, 3) = 1.0;
        m(3, 2) = -1.0;
        return m;
    }();
    return omega;
}

double symplectic_eigenvalue(const Mat2& sigma)
{
    const double det = sigma.determinant();
    if (!(det > 0.0)) {
        throw std::invalid_argument("single-mode covariance is not positive definite");
    }
    return std::sqrt(det);
}

std::array<double, 2> symplectic_eigenvalues(const Mat4& sigma)
{
    // With sigma = L L^T, K = L^T Omega L is antisymmetric with eigenvalues +-i nu, so
    // K^T K is symmetric with each nu^2 twice. This stays accurate when nu_- = nu_+.
    Eigen::LLT<Mat4> llt(sigma);
    if (llt.info() == Eigen::Success) {
        const Mat4 l = llt.matrixL();
        const Mat4 k = l.transpose() * symplectic_form() * l;
        const Eigen::SelfAdjointEigenSolver<Mat4> solver(k.transpose() * k, Eigen::EigenvaluesOnly);
        const Eigen::Vector4d ev = solver.eigenvalues();
        return {std::sqrt(std::max(0.0, 0.5 * (ev(0) + ev(1)))), std::sqrt(std::max(0.0, 0.5 * (ev(2) + ev(3))))};
    }
    // nu_{-/+}^2 = (Delta -/+ sqrt(Delta^2 - 4 det sigma)) / 2, Delta = I1 + I2 + 2 I3.
    const Mat2 a = sigma.topLeftCorner<2, 2>();
    const Mat2 b = sigma.bottomRightCorner<2, 2>();
    const Mat2 c = sigma.topRightCorner<2, 2>();
    const double delta = a.determinant() + b.determinant() + 2.0 * c.determinant();
    const double det = sigma.determinant();
    const double disc = std::sqrt(std::max(0.0, delta * delta - 4.0 * det));
    const double plus = 0.5 * (delta + disc);
    const double minus = plus > 0.0 ? det / plus : 0.0;
    return {std::sqrt(std::max(0.0, minus)), std::sqrt(std::max(0.0, plus))};
}

void require_finite(const Mat4& m, const std::string& what)
{
    if (!m.allFinite()) {
        throw std::invalid_argument(what + " has non-finite entries");
    }
}

CovarianceMatrix::CovarianceMatrix(const Mat4& sigma, double tol)
{
    require_finite(sigma, "covariance matrix");
    const double scale = std::max(1.0, sigma.cwiseAbs().maxCoeff());
    if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
        throw std::invalid_argument("covariance matrix is not symmetric");
    }
    sigma_ = 0.5 * (sigma + sigma.transpose());

    Eigen::LLT<Mat4> llt(sigma_);
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("covariance matrix is not positive definite");
    }
    const auto nu = symplectic_eigenvalues(sigma_);
    // nu_- is only resolved to about eps nu_+^2 / nu_-; widen by that floor.
    const double floor = 16.0 * std::numeric_limits<double>::epsilon() * nu[1] * nu[1] / std::max(nu[0], 1e-300);
    if (nu[0] < 0.5 - tol - floor) {
        std::ostringstream os;
        os << "covariance matrix violates the uncertainty relation (smallest symplectic eigenvalue "
           << nu[0] << " < 1/2)";
        throw std::invalid_argument(os.str());
    }
}

CovarianceMatrix::CovarianceMatrix(const Mat4& sigma, TrustedTag) : sigma_(sigma) {}

CovarianceMatrix CovarianceMatrix::trusted(const Mat4& sigma)
{
    require_finite(sigma, "covariance matrix");
    return CovarianceMatrix(Mat4(0.5 * (sigma + sigma.transpose())), TrustedTag{});
}

CovarianceMatrix CovarianceMatrix::thermal(double N_a, double N_b)
{
    if (!(N_a >= 0.0) || !(N_b >= 0.0)) {
        throw std::invalid_argument("thermal occupations must be non-negative");
    }
    Mat4 s = Mat4::Zero();
    s(0, 0) = s(1, 1) = N_a + 0.5;
    s(2, 2) = s(3, 3) = N_b + 0.5;
    return CovarianceMatrix(s, TrustedTag{});
}

CovarianceMatrix CovarianceMatrix::swapped_modes() const
{
    Eigen::PermutationMatrix<4> perm;
    perm.indices() << 2, 3, 0, 1;
    const Mat4 swapped = perm * sigma_ * perm.transpose();
    return CovarianceMatrix(swapped, TrustedTag{});
}

} // namespace ness
