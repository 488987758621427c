#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "fockmetric/errors.hpp"

namespace fockmetric {

using Complex = std::complex<double>;

// Pure state over a truncated Fock basis. Coefficients are indexed by photon
// number, levels 0..dim-1. Normalization is enforced at construction.
struct PureKet {
    Eigen::VectorXcd coeffs;
    double omega;

    PureKet(Eigen::VectorXcd c, double mode_omega);
    int dim() const { return static_cast<int>(coeffs.size()); }
};

PureKet fock_ket(int n, double omega, int dim);

// Equal-amplitude superposition of the given Fock levels.
PureKet superposition_ket(const std::vector<int>& levels, double omega, int dim);

// Hermitian, unit-trace, positive-semidefinite state over one or two
// truncated modes. The constructor checks the contracts (Hermiticity within
// 1e-12, trace within 1e-12 of one, smallest eigenvalue >= -1e-10) and then
// stores the symmetrized matrix (rho + rho^dag)/2 so round-off drift does not
// accumulate over long evolutions.
struct DensityMatrix {
    Eigen::MatrixXcd mat;
    std::vector<int> mode_dims;
    std::vector<double> omega_per_mode;

    DensityMatrix(Eigen::MatrixXcd m, std::vector<int> dims, std::vector<double> omegas);
    int dim() const { return static_cast<int>(mat.rows()); }
    int modes() const { return static_cast<int>(mode_dims.size()); }
};

DensityMatrix to_density(const PureKet& ket);

enum class OperatorKind { annihilation, number, hamiltonian, kraus, generic };

struct OperatorMatrix {
    Eigen::MatrixXcd mat;
    OperatorKind kind = OperatorKind::generic;
};

// Lowering operator on a dim-level truncation: a|n> = sqrt(n)|n-1>.
OperatorMatrix annihilation_matrix(int dim);

// Photon-number operator, diag(0, 1, ..., dim-1).
OperatorMatrix number_matrix(int dim);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// -sum lambda_i ln lambda_i in nats; eigenvalues below 1e-14 count as zero.
double von_neumann_entropy(const DensityMatrix& rho);

// Uhlmann fidelity (Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))^2. When either
// argument is pure the overlap fast path <psi|other|psi> is used.
double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);

// Reduced state of a two-mode density matrix; keep selects the surviving mode.
DensityMatrix partial_trace(const DensityMatrix& rho, int keep);

// Kronecker product of two states; mode bookkeeping is concatenated.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Tr[op rho].
Complex expectation(const OperatorMatrix& op, const DensityMatrix& rho);

}  // namespace fockmetric
