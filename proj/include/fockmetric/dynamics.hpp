#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fockmetric/exec.hpp"
#include "fockmetric/hilbert.hpp"

namespace fockmetric {

// Two-mode excitation-exchange protocol
//   H = omega_s a^dag a + omega_a b^dag b + gamma (a^dag b + a b^dag),
// system starting in |0>, ancilla in |m>.
struct ProtocolConfig {
    double omega_s;
    double omega_a;
    double gamma;
    int m;    // ancilla Fock level
    int dim;  // per-mode truncation
    Eigen::VectorXd t_grid;
};

// Resonant defaults: omega_s = omega_a = 1, dim = m + 4 (exchange conserves
// total excitation, so m+1 levels suffice; the margin is defensive), and a
// 201-point grid on [0, pi/(2 gamma)] so the full-swap time is the last grid
// point and the half-swap time pi/(4 gamma) is exactly the middle one.
ProtocolConfig resonant_protocol(int m = 1, double gamma = 0.1);

struct EvolutionRow {
    double t;
    double ng_system;
    double ng_ancilla;
    double mutual_info;
    double fidelity;          // of the reduced system state to |m><m|
    double balance_residual;  // see information_balance_residual
    double total_excitation;  // <N_tot>, conserved diagnostic
};

struct EvolutionTrace {
    std::vector<EvolutionRow> rows;
};

OperatorMatrix build_hamiltonian(const ProtocolConfig& cfg);

// U rho0 U^dag with U = exp(-iHt) from the eigendecomposition of H.
DensityMatrix evolve(const DensityMatrix& rho0, const OperatorMatrix& H, double t);

// Full trace over cfg.t_grid. H is diagonalized once; the time loop is an
// OpenMP kernel with one row slot per iteration, so serial and parallel
// traces are bitwise identical.
EvolutionTrace run_protocol(const ProtocolConfig& cfg, Exec exec = Exec::parallel);

// S(rho_S) + S(rho_A) - S(rho) for a two-mode state.
double mutual_information(const DensityMatrix& rho);

// Residual of the information-balance identity
//   I_SA - I_SA,G = (S_G - S) - ng_S - ng_A,
// where I_SA,G is the mutual information of the reference Gaussians (two
// single-mode references and the joint two-mode reference) and S_G the joint
// reference entropy. The identity is algebraic once all entropies come from
// one consistent moment convention, so the returned |lhs - rhs| is a
// round-off-level consistency check across the entropy, moment, and
// symplectic-spectrum code paths. Every term is computed independently.
double information_balance_residual(const DensityMatrix& rho);

// First grid time with fidelity >= 1 - 1e-9, refined by golden-section
// search on the surrounding grid interval. If no grid point qualifies
// (off-resonant drive), reports the refined global fidelity maximum with
// reached = false.
struct SwapTime {
    double t;
    double fidelity;
    bool reached;
};
SwapTime find_swap_time(const ProtocolConfig& cfg);

}  // namespace fockmetric
