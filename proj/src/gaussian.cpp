#include "fockmetric/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace fockmetric {

namespace {

constexpr double kSymTol = 1e-12;
constexpr double kDetFloor = 1.0 - 1e-10;  // uncertainty bound, vacuum det = 1

// Quadrature operators of one mode at frequency w on a dim-level truncation,
// q = (a + a^dag)/sqrt(2w), p = i sqrt(w/2) (a^dag - a).
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> quadrature_ops(int dim, double w) {
    const Eigen::MatrixXcd a = annihilation_matrix(dim).mat;
    const Eigen::MatrixXcd ad = a.adjoint();
    const Complex i_unit(0.0, 1.0);
    Eigen::MatrixXcd q = (a + ad) / std::sqrt(2.0 * w);
    Eigen::MatrixXcd p = i_unit * std::sqrt(0.5 * w) * (ad - a);
    return {std::move(q), std::move(p)};
}

}  // namespace

GaussianMoments::GaussianMoments(Eigen::VectorXd d, Eigen::MatrixXd s, Eigen::VectorXd w)
    : mean(std::move(d)), sigma(std::move(s)), omega(std::move(w)) {
    const Eigen::Index size = mean.size();
    if (size != 2 && size != 4)
        throw std::invalid_argument("GaussianMoments: one or two modes only");
    if (sigma.rows() != size || sigma.cols() != size)
        throw std::invalid_argument("GaussianMoments: covariance size mismatch");
    if (omega.size() != size / 2)
        throw std::invalid_argument("GaussianMoments: one frequency per mode");
    for (Eigen::Index k = 0; k < omega.size(); ++k)
        if (!(omega(k) > 0.0)) throw std::invalid_argument("GaussianMoments: omega must be positive");
    const double asym = (sigma - sigma.transpose()).cwiseAbs().maxCoeff();
    if (asym > kSymTol)
        throw ContractViolation("GaussianMoments: covariance asymmetry " + std::to_string(asym));
    sigma = 0.5 * (sigma + sigma.transpose()).eval();
    const double det = sigma.determinant();
    if (det < kDetFloor)
        throw ContractViolation("GaussianMoments: det " + std::to_string(det) +
                                " below the uncertainty bound");
}

GaussianMoments moments_of_fock(int n, double omega) {
    if (n < 0) throw std::invalid_argument("moments_of_fock: negative level");
    if (!(omega > 0.0)) throw std::invalid_argument("moments_of_fock: omega must be positive");
    Eigen::Matrix2d sigma = Eigen::Matrix2d::Zero();
    sigma(0, 0) = (2.0 * n + 1.0) / omega;
    sigma(1, 1) = (2.0 * n + 1.0) * omega;
    Eigen::VectorXd w(1);
    w << omega;
    return GaussianMoments(Eigen::Vector2d::Zero(), sigma, std::move(w));
}

namespace {

GaussianMoments moments_from_quadratures(const DensityMatrix& rho,
                                         const std::vector<Eigen::MatrixXcd>& R,
                                         Eigen::VectorXd omegas) {
    const Eigen::Index m = static_cast<Eigen::Index>(R.size());
    Eigen::VectorXd mean(m);
    for (Eigen::Index i = 0; i < m; ++i)
        mean(i) = std::real((R[i] * rho.mat).trace());
    Eigen::MatrixXd sigma(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) {
            const Complex sym = ((R[i] * R[j] + R[j] * R[i]) * rho.mat).trace();
            sigma(i, j) = std::real(sym) - 2.0 * mean(i) * mean(j);
        }
    return GaussianMoments(std::move(mean), std::move(sigma), std::move(omegas));
}

}  // namespace

GaussianMoments moments_of_state(const DensityMatrix& rho, int mode) {
    if (mode < 0 || mode >= rho.modes())
        throw std::invalid_argument("moments_of_state: mode index out of range");
    if (rho.modes() == 1) {
        auto [q, p] = quadrature_ops(rho.dim(), rho.omega_per_mode[0]);
        Eigen::VectorXd w(1);
        w << rho.omega_per_mode[0];
        return moments_from_quadratures(rho, {q, p}, std::move(w));
    }
    return moments_of_state(partial_trace(rho, mode), 0);
}

GaussianMoments moments_of_state(const DensityMatrix& rho) {
    if (rho.modes() == 1) return moments_of_state(rho, 0);
    const int d0 = rho.mode_dims[0];
    const int d1 = rho.mode_dims[1];
    auto [q0, p0] = quadrature_ops(d0, rho.omega_per_mode[0]);
    auto [q1, p1] = quadrature_ops(d1, rho.omega_per_mode[1]);
    const Eigen::MatrixXcd id0 = Eigen::MatrixXcd::Identity(d0, d0);
    const Eigen::MatrixXcd id1 = Eigen::MatrixXcd::Identity(d1, d1);
    std::vector<Eigen::MatrixXcd> R = {kron(q0, id1), kron(p0, id1), kron(id0, q1),
                                       kron(id0, p1)};
    Eigen::VectorXd w(2);
    w << rho.omega_per_mode[0], rho.omega_per_mode[1];
    return moments_from_quadratures(rho, R, std::move(w));
}

double symplectic_nu(const GaussianMoments& m) {
    if (m.modes() != 1) throw std::invalid_argument("symplectic_nu: single mode only");
    return std::sqrt(m.sigma.determinant());
}

Eigen::VectorXd symplectic_spectrum(const GaussianMoments& m) {
    const int n_modes = m.modes();
    Eigen::MatrixXd omega_form = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        omega_form(2 * k, 2 * k + 1) = 1.0;
        omega_form(2 * k + 1, 2 * k) = -1.0;
    }
    // Eigenvalues of Omega sigma come in +-i nu pairs.
    Eigen::EigenSolver<Eigen::MatrixXd> es(omega_form * m.sigma);
    std::vector<double> mags(2 * n_modes);
    for (int i = 0; i < 2 * n_modes; ++i) mags[i] = std::abs(es.eigenvalues()(i).imag());
    std::sort(mags.begin(), mags.end(), std::greater<>());
    Eigen::VectorXd nus(n_modes);
    for (int k = 0; k < n_modes; ++k) {
        nus(k) = 0.5 * (mags[2 * k] + mags[2 * k + 1]);  // average the pair
        if (nus(k) < 1.0 - 1e-10)
            throw ContractViolation("symplectic_spectrum: nu " + std::to_string(nus(k)) +
                                    " below 1");
    }
    return nus;
}

double thermal_entropy(double nbar) {
    if (nbar < 0.0) {
        if (nbar < -1e-9)
            throw std::invalid_argument("thermal_entropy: negative occupation");
        return 0.0;  // round-off below the pure limit
    }
    if (nbar == 0.0) return 0.0;
    return (nbar + 1.0) * std::log(nbar + 1.0) - nbar * std::log(nbar);
}

double reference_gaussian_entropy(const GaussianMoments& m) {
    if (m.modes() == 1) return thermal_entropy(0.5 * (symplectic_nu(m) - 1.0));
    const Eigen::VectorXd nus = symplectic_spectrum(m);
    double s = 0.0;
    for (Eigen::Index k = 0; k < nus.size(); ++k) s += thermal_entropy(0.5 * (nus(k) - 1.0));
    return s;
}

namespace {

double clamp_ng(double value) {
    if (value >= 0.0) return value;
    if (value >= -1e-10) return 0.0;  // round-off on a true zero
    throw ContractViolation("ng_degree: negative value " + std::to_string(value));
}

}  // namespace

double ng_degree(const DensityMatrix& rho, int mode) {
    if (mode < 0 || mode >= rho.modes())
        throw std::invalid_argument("ng_degree: mode index out of range");
    const DensityMatrix reduced = (rho.modes() == 1) ? rho : partial_trace(rho, mode);
    const double s_gauss = reference_gaussian_entropy(moments_of_state(reduced, 0));
    return clamp_ng(s_gauss - von_neumann_entropy(reduced));
}

double ng_degree(const DensityMatrix& rho) {
    const double s_gauss = reference_gaussian_entropy(moments_of_state(rho));
    return clamp_ng(s_gauss - von_neumann_entropy(rho));
}

double ng_degree_fock(int n) {
    if (n < 0) throw std::invalid_argument("ng_degree_fock: negative level");
    if (n == 0) return 0.0;
    const double dn = n;
    return (dn + 1.0) * std::log(dn + 1.0) - dn * std::log(dn);
}

}  // namespace fockmetric
