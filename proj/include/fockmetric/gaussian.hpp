#pragma once

#include <Eigen/Dense>

#include "fockmetric/hilbert.hpp"

namespace fockmetric {

// First and second quadrature moments of one or two modes, basis order
// (q1, p1[, q2, p2]). Convention:
//   sigma_ij = <R_i R_j + R_j R_i> - 2 <R_i><R_j>
// with no 1/2 on the symmetrization, so the vacuum has sigma = I and the
// single-mode uncertainty bound reads det(sigma) >= 1.
struct GaussianMoments {
    Eigen::VectorXd mean;
    Eigen::MatrixXd sigma;
    Eigen::VectorXd omega;  // one frequency per mode (bookkeeping only)

    GaussianMoments(Eigen::VectorXd d, Eigen::MatrixXd s, Eigen::VectorXd w);
    int modes() const { return static_cast<int>(omega.size()); }
};

// Moments of |n> at frequency omega: mean 0, sigma = diag((2n+1)/w, (2n+1)w).
GaussianMoments moments_of_fock(int n, double omega);

// Single-mode moments of the state reduced to `mode`, via ladder-operator
// expectations (q = (a + a^dag)/sqrt(2 w), p = i sqrt(w/2)(a^dag - a)).
GaussianMoments moments_of_state(const DensityMatrix& rho, int mode);

// Moments of all modes jointly, cross-covariance blocks included.
GaussianMoments moments_of_state(const DensityMatrix& rho);

// Symplectic eigenvalue of a single-mode covariance: nu = sqrt(det sigma),
// >= 1 up to round-off; the matching Gaussian state has purity 1/nu.
double symplectic_nu(const GaussianMoments& m);

// Symplectic spectrum for any mode count: the positive imaginary parts of
// the eigenvalues of Omega sigma, one per mode, descending.
Eigen::VectorXd symplectic_spectrum(const GaussianMoments& m);

// Entropy of the thermal state with mean occupation nbar:
//   g(nbar) = (nbar+1) ln(nbar+1) - nbar ln nbar,  g(0) = 0.
double thermal_entropy(double nbar);

// Entropy of the Gaussian state with the given moments,
// sum_k g((nu_k - 1)/2) over the symplectic spectrum.
double reference_gaussian_entropy(const GaussianMoments& m);

// Relative-entropy non-Gaussianity of the state reduced to `mode`:
// S(reference Gaussian) - S(rho). Mathematically >= 0; values in
// [-1e-10, 0) are clamped to zero, anything lower is a contract violation.
double ng_degree(const DensityMatrix& rho, int mode);

// Same for the state as a whole (single- or two-mode).
double ng_degree(const DensityMatrix& rho);

// Closed form for |n>: (n+1) ln(n+1) - n ln n, frequency-independent.
double ng_degree_fock(int n);

}  // namespace fockmetric
