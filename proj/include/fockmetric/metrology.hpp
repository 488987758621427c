#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fockmetric/errors.hpp"

namespace fockmetric {

enum class QfiMethod {
    closed_form,
    derivative_numeric,
    gaussian_formula,
    superposition_averaged,
    superposition_exact,
};

struct CramerRaoBound {
    long n_meas;
    double bound;  // 1 / (n_meas * qfi)
};

struct QfiReport {
    double omega;
    std::string probe;  // "fock:3", "gaussian-ref:3", "superposition:0,1,2", ...
    double qfi;
    QfiMethod method;
    std::optional<CramerRaoBound> crb;
};

// QFI of |n> for frequency estimation, closed form (n^2 + n + 1)/(2 omega^2).
QfiReport qfi_fock_closed(int n, double omega);

// Same quantity from quadrature, F = 4 (<dpsi|dpsi> - <psi|dpsi>^2) with the
// exact ladder form of dpsi. Levels up to n = 40.
QfiReport qfi_pure_numeric(int n, double omega, int points = 200);

// Single-mode Gaussian-family QFI from parametrized moments,
//   F = (1/2) Tr[(sigma^{-1} sigma')^2] / (1 + P^2)
//     + 2 P'^2 / (1 - P^4) + d'^T sigma^{-1} d',    P = det(sigma)^{-1/2},
// with sigma', P', d' by central differences of step 1e-6 * omega. Families
// that stay pure have P identically 1; the purity term is then 0/0 and is
// dropped. The finite differences put a ~1e-8 relative floor on the result;
// do not expect closed-form agreement beyond that.
QfiReport qfi_gaussian_formula(const std::function<Eigen::Matrix2d(double)>& sigma_fn,
                               const std::function<Eigen::Vector2d(double)>& d_fn,
                               double omega);

// QFI of the Gaussian state with the moments of |n>, closed form
//   (2n+1)^2 / ([(2n+1)^2 + 1] omega^2).
QfiReport qfi_gaussian_fock(int n, double omega);

// Estimator variance bound 1/(n_meas * qfi).
double cramer_rao(double qfi, long n_meas);

// Fock advantage over the vacuum probe at equal omega. The ratio is
// n^2 + n + 1, frequency-independent; log_scaled is 10 ln(ratio). Both are
// exposed because downstream figure data uses the ratio while the 10-ln
// scaling is the other published convention for the same symbol.
struct RelativeAdvantage {
    double ratio;
    double log_scaled;
};
RelativeAdvantage relative_advantage(int n);

// QFI per unit mean energy above the ground state, (n^2+n+1)/(2 n omega^3),
// n >= 1 (the vacuum has no energy gap to pay for).
double qfi_per_energy(int n, double omega);

// Equal-amplitude superposition over the given levels, scored two ways.
//
// The averaged form (1/N) sum_i F_i treats the component levels as
// independent probes; it is exact only when every cross overlap
// <dpsi_i|dpsi_j>, i != j, vanishes. The ladder structure of dpsi makes
// those overlaps nonzero for level pairs exactly four apart, so for such
// sets the averaged form overestimates. The exact form keeps all cross
// terms. Max level 38 (the ladder reaches level+2).
QfiReport qfi_superposition_averaged(const std::vector<int>& levels, double omega);
QfiReport qfi_superposition_exact(const std::vector<int>& levels, double omega);

}  // namespace fockmetric
