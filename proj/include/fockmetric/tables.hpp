#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include <json.hpp>

#include "fockmetric/dynamics.hpp"
#include "fockmetric/exec.hpp"

namespace fockmetric {

// One emitted dataset: numeric rows under named columns, plus the command
// and parameters that produced it so a data file is self-describing.
struct Table {
    std::string command;
    nlohmann::json params;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Frequency sweep specification. Default covers the visible range of the
// sweep figures: 200 log-spaced points on [0.05, 1.0].
struct OmegaGrid {
    double start = 0.05;
    double stop = 1.0;
    int count = 200;
    bool log_spaced = true;

    Eigen::VectorXd points() const;
};

// Non-Gaussianity degree of |n> for n = 0..10 (columns n, delta_ng).
Table fig1_table();

// QFI of Fock probes n in {0,3,5,10} and the omega^-2 envelope of the
// moment-matched Gaussian family across the sweep
// (columns omega, F_n0, F_n3, F_n5, F_n10, F_gauss).
Table fig2_table(const OmegaGrid& grid, Exec exec = Exec::parallel);

// QFI per unit probe energy across the sweep (columns omega, R_n<k>...).
Table fig3_table(const OmegaGrid& grid, const std::vector<int>& levels = {3, 5, 10},
                 Exec exec = Exec::parallel);

// (delta_ng, QFI) pairs per level at a few fixed frequencies
// (columns n, delta_ng, F_omega_<w>...).
Table fig4_table(const std::vector<double>& omegas = {0.05, 0.1, 0.5},
                 const std::vector<int>& levels = {1, 3, 5, 7, 10});

// Transfer-protocol trace
// (columns t, ng_system, ng_ancilla, mutual_info, fidelity, balance_residual).
Table fig5_table(const ProtocolConfig& cfg, Exec exec = Exec::parallel);

// Averaged vs exact superposition QFI for level sets {0..N-1}, N = 1..max_n
// (columns omega, F_avg_N1, F_exact_N1, ...).
Table fig6_table(const OmegaGrid& grid, int max_n = 5, Exec exec = Exec::parallel);

// Scripting front ends: closed-form QFI for chosen levels across the sweep;
// nG-degree per level; channel output on the vacuum across p.
Table qfi_table(const OmegaGrid& grid, const std::vector<int>& levels,
                Exec exec = Exec::parallel);
Table ng_table(const std::vector<int>& levels);
Table measure_table(const std::vector<double>& ps, double omega = 1.0);

}  // namespace fockmetric
