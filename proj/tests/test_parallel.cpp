#include <cmath>

#include <doctest.h>

#include "fockmetric/dynamics.hpp"
#include "fockmetric/tables.hpp"
#include "fockmetric/wavefunction.hpp"

using namespace fockmetric;

// The OpenMP kernels write one output slot per loop index, so the parallel
// results must match the serial reference loops bitwise, not just to
// tolerance. The reduction in wigner_total_mass combines per-row partials in
// a fixed order and is held to the same standard.

TEST_CASE("table sweeps: serial and parallel rows are identical") {
    const OmegaGrid grid{0.05, 1.0, 64, true};
    for (const auto& make : {+[](const OmegaGrid& g, Exec e) { return fig2_table(g, e); },
                             +[](const OmegaGrid& g, Exec e) { return fig6_table(g, 4, e); },
                             +[](const OmegaGrid& g, Exec e) {
                                 return fig3_table(g, {3, 5, 10}, e);
                             }}) {
        const Table s = make(grid, Exec::serial);
        const Table p = make(grid, Exec::parallel);
        REQUIRE(s.rows.size() == p.rows.size());
        for (std::size_t i = 0; i < s.rows.size(); ++i) {
            REQUIRE(s.rows[i].size() == p.rows[i].size());
            for (std::size_t j = 0; j < s.rows[i].size(); ++j)
                CHECK(s.rows[i][j] == p.rows[i][j]);
        }
    }
}

TEST_CASE("protocol trace: serial and parallel rows are identical") {
    const ProtocolConfig cfg = resonant_protocol(2, 0.15);
    const EvolutionTrace s = run_protocol(cfg, Exec::serial);
    const EvolutionTrace p = run_protocol(cfg, Exec::parallel);
    REQUIRE(s.rows.size() == p.rows.size());
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        CHECK(s.rows[i].t == p.rows[i].t);
        CHECK(s.rows[i].ng_system == p.rows[i].ng_system);
        CHECK(s.rows[i].ng_ancilla == p.rows[i].ng_ancilla);
        CHECK(s.rows[i].mutual_info == p.rows[i].mutual_info);
        CHECK(s.rows[i].fidelity == p.rows[i].fidelity);
        CHECK(s.rows[i].balance_residual == p.rows[i].balance_residual);
        CHECK(s.rows[i].total_excitation == p.rows[i].total_excitation);
    }
}

TEST_CASE("wigner kernels: serial and parallel agree") {
    const WaveParams params{7, 0.6};
    const Eigen::VectorXd qs = Eigen::VectorXd::LinSpaced(41, -6.0, 6.0);
    const Eigen::VectorXd ps = Eigen::VectorXd::LinSpaced(33, -5.0, 5.0);
    const Eigen::MatrixXd ws = wigner_grid(params, qs, ps, Exec::serial);
    const Eigen::MatrixXd wp = wigner_grid(params, qs, ps, Exec::parallel);
    CHECK((ws - wp).cwiseAbs().maxCoeff() == 0.0);

    const double ms = wigner_total_mass(params, 160, Exec::serial);
    const double mp = wigner_total_mass(params, 160, Exec::parallel);
    CHECK(ms == mp);
}

TEST_CASE("exceptions cross the parallel-loop boundary") {
    // level 0 has no energy gap; qfi_per_energy rejects it from inside the
    // parallel sweep and the error must surface unchanged
    CHECK_THROWS_AS(fig3_table(OmegaGrid{0.1, 1.0, 32, true}, {0, 3}, Exec::parallel),
                    std::invalid_argument);
    CHECK_THROWS_AS(fig3_table(OmegaGrid{0.1, 1.0, 32, true}, {0, 3}, Exec::serial),
                    std::invalid_argument);
}
