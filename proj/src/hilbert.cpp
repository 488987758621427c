#include "fockmetric/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fockmetric {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigFloor = -1e-10;

}  // namespace

PureKet::PureKet(Eigen::VectorXcd c, double mode_omega)
    : coeffs(std::move(c)), omega(mode_omega) {
    if (coeffs.size() < 1) throw std::invalid_argument("PureKet: empty coefficient vector");
    if (!(omega > 0.0)) throw std::invalid_argument("PureKet: omega must be positive");
    const double norm2 = coeffs.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormTol)
        throw ContractViolation("PureKet: norm deviates from 1 by " +
                                std::to_string(std::abs(norm2 - 1.0)));
}

PureKet fock_ket(int n, double omega, int dim) {
    if (dim < 1) throw std::invalid_argument("fock_ket: dim must be >= 1");
    if (n < 0 || n >= dim) throw std::invalid_argument("fock_ket: level outside truncation");
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
    c(n) = 1.0;
    return PureKet(std::move(c), omega);
}

PureKet superposition_ket(const std::vector<int>& levels, double omega, int dim) {
    if (levels.empty()) throw std::invalid_argument("superposition_ket: empty level set");
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
    const double amp = 1.0 / std::sqrt(static_cast<double>(levels.size()));
    for (int lv : levels) {
        if (lv < 0 || lv >= dim)
            throw std::invalid_argument("superposition_ket: level outside truncation");
        if (std::abs(c(lv)) != 0.0)
            throw std::invalid_argument("superposition_ket: duplicate level");
        c(lv) = amp;
    }
    return PureKet(std::move(c), omega);
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m, std::vector<int> dims,
                             std::vector<double> omegas)
    : mat(std::move(m)), mode_dims(std::move(dims)), omega_per_mode(std::move(omegas)) {
    if (mat.rows() != mat.cols()) throw std::invalid_argument("DensityMatrix: not square");
    if (mode_dims.empty() || mode_dims.size() != omega_per_mode.size())
        throw std::invalid_argument("DensityMatrix: inconsistent mode bookkeeping");
    long prod = 1;
    for (int d : mode_dims) {
        if (d < 1) throw std::invalid_argument("DensityMatrix: mode dim must be >= 1");
        prod *= d;
    }
    if (prod != mat.rows())
        throw std::invalid_argument("DensityMatrix: mode dims do not factor the matrix");
    for (double w : omega_per_mode)
        if (!(w > 0.0)) throw std::invalid_argument("DensityMatrix: omega must be positive");

    const double herm_dev = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > kHermTol)
        throw ContractViolation("DensityMatrix: Hermiticity deviation " +
                                std::to_string(herm_dev));
    // Symmetrize so round-off drift does not accumulate over long evolutions.
    mat = 0.5 * (mat + mat.adjoint()).eval();

    const double trace_dev = std::abs(mat.trace() - Complex(1.0, 0.0));
    if (trace_dev > kTraceTol)
        throw ContractViolation("DensityMatrix: trace deviates from 1 by " +
                                std::to_string(trace_dev));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < kEigFloor)
        throw ContractViolation("DensityMatrix: eigenvalue " + std::to_string(min_eig) +
                                " below positivity floor");
}

DensityMatrix to_density(const PureKet& ket) {
    Eigen::MatrixXcd m = ket.coeffs * ket.coeffs.adjoint();
    return DensityMatrix(std::move(m), {ket.dim()}, {ket.omega});
}

OperatorMatrix annihilation_matrix(int dim) {
    if (dim < 1) throw std::invalid_argument("annihilation_matrix: dim must be >= 1");
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return {std::move(a), OperatorKind::annihilation};
}

OperatorMatrix number_matrix(int dim) {
    if (dim < 1) throw std::invalid_argument("number_matrix: dim must be >= 1");
    Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
    return {std::move(n), OperatorKind::number};
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.mat, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double lam = es.eigenvalues()(i);
        if (lam < 1e-14) continue;  // 0 ln 0 = 0, and diagonalization round-off
        s -= lam * std::log(lam);
    }
    return std::max(s, 0.0);
}

namespace {

bool is_pure(const DensityMatrix& rho) {
    // Tr rho^2 equals the squared Frobenius norm for Hermitian rho.
    return std::abs(rho.mat.squaredNorm() - 1.0) < 1e-12;
}

Eigen::VectorXcd dominant_eigenvector(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.mat);
    Eigen::Index top;
    es.eigenvalues().maxCoeff(&top);
    return es.eigenvectors().col(top);
}

}  // namespace

double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    if (rho1.dim() != rho2.dim())
        throw std::invalid_argument("fidelity: dimension mismatch");
    // Pure fast path: F(rho, |psi><psi|) = <psi|rho|psi>.
    if (is_pure(rho2)) {
        const Eigen::VectorXcd psi = dominant_eigenvector(rho2);
        return std::clamp(std::real(psi.dot(rho1.mat * psi)), 0.0, 1.0);
    }
    if (is_pure(rho1)) {
        const Eigen::VectorXcd psi = dominant_eigenvector(rho1);
        return std::clamp(std::real(psi.dot(rho2.mat * psi)), 0.0, 1.0);
    }
    // General Uhlmann path: (Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))^2.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es1(rho1.mat);
    Eigen::VectorXd lam = es1.eigenvalues().cwiseMax(0.0);
    Eigen::MatrixXcd root =
        es1.eigenvectors() * lam.cwiseSqrt().asDiagonal() * es1.eigenvectors().adjoint();
    Eigen::MatrixXcd inner = root * rho2.mat * root;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es2(0.5 * (inner + inner.adjoint()),
                                                        Eigen::EigenvaluesOnly);
    double tr = 0.0;
    for (Eigen::Index i = 0; i < es2.eigenvalues().size(); ++i)
        tr += std::sqrt(std::max(es2.eigenvalues()(i), 0.0));
    return std::clamp(tr * tr, 0.0, 1.0);
}

DensityMatrix partial_trace(const DensityMatrix& rho, int keep) {
    if (rho.modes() != 2) throw std::invalid_argument("partial_trace: need a two-mode state");
    if (keep != 0 && keep != 1) throw std::invalid_argument("partial_trace: keep must be 0 or 1");
    const int d0 = rho.mode_dims[0];
    const int d1 = rho.mode_dims[1];
    const int dk = (keep == 0) ? d0 : d1;
    const int dt = (keep == 0) ? d1 : d0;
    Eigen::MatrixXcd red = Eigen::MatrixXcd::Zero(dk, dk);
    for (int i = 0; i < dk; ++i)
        for (int j = 0; j < dk; ++j)
            for (int k = 0; k < dt; ++k) {
                if (keep == 0)
                    red(i, j) += rho.mat(i * d1 + k, j * d1 + k);
                else
                    red(i, j) += rho.mat(k * d1 + i, k * d1 + j);
            }
    return DensityMatrix(std::move(red), {dk}, {rho.omega_per_mode[keep]});
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    std::vector<int> dims = a.mode_dims;
    dims.insert(dims.end(), b.mode_dims.begin(), b.mode_dims.end());
    std::vector<double> omegas = a.omega_per_mode;
    omegas.insert(omegas.end(), b.omega_per_mode.begin(), b.omega_per_mode.end());
    return DensityMatrix(kron(a.mat, b.mat), std::move(dims), std::move(omegas));
}

Complex expectation(const OperatorMatrix& op, const DensityMatrix& rho) {
    if (op.mat.rows() != rho.dim())
        throw std::invalid_argument("expectation: dimension mismatch");
    return (op.mat * rho.mat).trace();
}

}  // namespace fockmetric
