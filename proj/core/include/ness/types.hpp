// types.hpp - Parameters, covariance matrices and error types shared by every module

#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ness {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;

// Precondition violations (bad parameters, unphysical states) throw
// std::invalid_argument. Failures of the numerics themselves throw NumericalError.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Drift matrix has an eigenvalue with non-negative real part; no stationary state exists.
class UnstableSystemError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Physical parameters of two coupled, locally damped oscillators. Frequencies and
// rates are in units of omega_b; the bath occupations are real-valued.
struct OscillatorParams {
    double omega_a{1.0};
    double omega_b{1.0};
    double G{0.0};
    double kappa_a{0.2};
    double kappa_b{0.2};
    double N_a{0.0};
    double N_b{0.0};

    // Throws std::invalid_argument unless kappa_a, kappa_b > 0, N_a, N_b >= 0 and all finite.
    void validate() const;

    // Throws unless omega_b == 1 (the closed-form expansions are written in rescaled units).
    void require_rescaled() const;

    friend bool operator==(const OscillatorParams&, const OscillatorParams&) = default;
};

// Fixed symplectic form for the quadrature ordering (q_a, p_a, q_b, p_b).
const Mat4& symplectic_form();

// Symplectic eigenvalues of a two-mode covariance, ascending. Vacuum has both equal to 1/2.
std::array<double, 2> symplectic_eigenvalues(const Mat4& sigma);

// Symplectic eigenvalue of a single-mode covariance: sqrt(det).
double symplectic_eigenvalue(const Mat2& sigma);

// A validated two-mode Gaussian covariance matrix, entries sigma_ij = <{u_i,u_j}>/2.
//
// Construction checks finiteness, symmetry, positive definiteness and the
// uncertainty relation (smallest symplectic eigenvalue >= 1/2 - tol). The stored
// matrix is the exact symmetrization of the input.
class CovarianceMatrix {
public:
    static constexpr double kDefaultTolerance = 1e-9;

    explicit CovarianceMatrix(const Mat4& sigma, double tol = kDefaultTolerance);

    // Product of local thermal states, (N_a + 1/2) 1 (+) (N_b + 1/2) 1.
    static CovarianceMatrix thermal(double N_a, double N_b);

    // Skips the physicality checks; only finiteness and symmetry are enforced.
    // Used for iterates the caller already knows to be physical.
    static CovarianceMatrix trusted(const Mat4& sigma);

    const Mat4& matrix() const noexcept { return sigma_; }
    double operator()(Eigen::Index i, Eigen::Index j) const { return sigma_(i, j); }

    Mat2 block_a() const { return sigma_.topLeftCorner<2, 2>(); }
    Mat2 block_b() const { return sigma_.bottomRightCorner<2, 2>(); }
    Mat2 block_c() const { return sigma_.topRightCorner<2, 2>(); }

    // Same state with the roles of the modes exchanged.
    CovarianceMatrix swapped_modes() const;

private:
    struct TrustedTag {};
    CovarianceMatrix(const Mat4& sigma, TrustedTag);

    Mat4 sigma_;
};

// Throws std::invalid_argument naming `what` if any entry is non-finite.
void require_finite(const Mat4& m, const std::string& what);

} // namespace ness
