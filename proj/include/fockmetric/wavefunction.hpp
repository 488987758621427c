#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "fockmetric/errors.hpp"
#include "fockmetric/exec.hpp"

namespace fockmetric {

// Oscillator wavefunction parameters (hbar = m = 1, frequency omega).
struct WaveParams {
    int n;
    double omega;
};

// Quadrature rule on the real line. For the Gauss-Hermite scheme the
// Gaussian envelope exp(-omega x^2) is folded into the weights, so the rule
// integrates f exactly whenever f = polynomial * exp(-omega x^2) of degree
// up to 2*points - 1; products of two same-omega wavefunctions (or their
// frequency derivatives) are of that form.
struct QuadratureGrid {
    enum class Scheme { gauss_hermite, trapezoid };
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
    Scheme scheme;
};

// Gauss-Hermite rule mapped to the envelope exp(-omega x^2). Nodes and
// weights of the unit rule come from the Golub-Welsch eigenproblem (cached
// per point count); the envelope-removal factor e^{y^2} is applied to the
// weights in log space so large grids neither overflow nor underflow.
QuadratureGrid gauss_hermite_grid(int points, double omega);

// Uniform grid with trapezoid weights on [-half_width, half_width].
QuadratureGrid trapezoid_grid(int points, double half_width);

// Physicists' Hermite polynomial H_n(x), three-term recurrence.
double hermite_physicists(int n, double x);

// Laguerre polynomial L_n(x), three-term recurrence.
double laguerre(int n, double x);

// Position-representation Fock wavefunction
//   psi_n(x) = (omega/pi)^{1/4} (2^n n!)^{-1/2} H_n(sqrt(omega) x) e^{-omega x^2/2},
// normalized with log-factorials so high levels stay finite. Public contract
// covers n <= 40; two extra levels are handled internally because the
// frequency derivative of level n reaches level n+2.
double psi(const WaveParams& p, double x);

// d psi_n / d omega at fixed x, exact two-level ladder form
//   (1/(4 omega)) [sqrt(n(n-1)) psi_{n-2} - sqrt((n+1)(n+2)) psi_{n+2}].
// No finite differencing in omega is involved.
double dpsi_domega(const WaveParams& p, double x);

// Quadrature approximation of  integral conj(f(x)) g(x) dx.
std::complex<double> overlap(const std::function<std::complex<double>(double)>& f,
                             const std::function<std::complex<double>(double)>& g,
                             const QuadratureGrid& grid);

// Same rule restricted to real-valued integrands; avoids the complex round
// trip on the hot paths (QFI overlaps, moments).
double overlap_real(const std::function<double(double)>& f,
                    const std::function<double(double)>& g, const QuadratureGrid& grid);

// integral (x - <x>)^order |psi_n|^2 dx, order in 1..4, default 200-node rule.
double central_moment(const WaveParams& p, int order);

// Closed-form Wigner function of |n><n| at phase-space point (q, p):
//   W_n = ((-1)^n / pi) e^{-2u} L_n(4u),  u = (omega q^2 + p^2/omega)/2,
// normalized so the full phase-space integral is 1.
double wigner_fock(const WaveParams& params, double q, double p);

// Row-major W(q_i, p_j) over a rectangular grid. The row loop is an
// OpenMP kernel; each row slot is written by exactly one thread, so serial
// and parallel results are bitwise identical.
Eigen::MatrixXd wigner_grid(const WaveParams& params, const Eigen::VectorXd& qs,
                            const Eigen::VectorXd& ps, Exec exec = Exec::parallel);

// Full phase-space integral of W_n by nested Gauss-Hermite rules (exact for
// the polynomial-times-Gaussian integrand). Each thread writes one per-row
// partial sum and the partials are combined in row order afterwards, so the
// parallel reduction matches the serial one bitwise.
double wigner_total_mass(const WaveParams& params, int points = 200,
                         Exec exec = Exec::parallel);

// integral W_n(q, p) dp at fixed q; equals |psi_n(q)|^2.
double wigner_marginal_q(const WaveParams& params, double q, int points = 200);

}  // namespace fockmetric
