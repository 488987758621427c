// Timing harness comparing the serial reference loops against the OpenMP
// paths on the heavier kernels.  Not registered with ctest; run by hand.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fockmetric/dynamics.hpp"
#include "fockmetric/exec.hpp"
#include "fockmetric/tables.hpp"
#include "fockmetric/wavefunction.hpp"

namespace {

using fockmetric::Exec;

double best_of_three_ms(const std::function<void()>& fn) {
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

double table_diff(const fockmetric::Table& a, const fockmetric::Table& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        for (std::size_t j = 0; j < a.rows[i].size(); ++j)
            d = std::max(d, std::abs(a.rows[i][j] - b.rows[i][j]));
    return d;
}

void report(const char* name, double serial_ms, double parallel_ms, double max_diff) {
    std::printf("%-28s %10.2f ms %10.2f ms   x%-6.2f   max|diff| %.3g\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms, max_diff);
}

}  // namespace

int main() {
    using namespace fockmetric;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP; both columns run the serial loop)\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        const OmegaGrid grid{0.05, 1.0, 2000, true};
        Table ts, tp;
        const double ms_s = best_of_three_ms([&] { ts = fig2_table(grid, Exec::serial); });
        const double ms_p = best_of_three_ms([&] { tp = fig2_table(grid, Exec::parallel); });
        report("qfi sweep (2000 pts)", ms_s, ms_p, table_diff(ts, tp));
    }

    {
        const WaveParams params{10, 0.5};
        const Eigen::VectorXd qs = Eigen::VectorXd::LinSpaced(600, -8.0, 8.0);
        const Eigen::VectorXd ps = qs;
        Eigen::MatrixXd ws, wp;
        const double ms_s =
            best_of_three_ms([&] { ws = wigner_grid(params, qs, ps, Exec::serial); });
        const double ms_p =
            best_of_three_ms([&] { wp = wigner_grid(params, qs, ps, Exec::parallel); });
        report("wigner grid (600x600)", ms_s, ms_p, (ws - wp).cwiseAbs().maxCoeff());
    }

    {
        const WaveParams params{10, 0.5};
        double ms = 0.0, mp = 0.0;
        const double ms_s =
            best_of_three_ms([&] { ms = wigner_total_mass(params, 400, Exec::serial); });
        const double ms_p =
            best_of_three_ms([&] { mp = wigner_total_mass(params, 400, Exec::parallel); });
        report("wigner mass (400-pt rule)", ms_s, ms_p, std::abs(ms - mp));
    }

    {
        ProtocolConfig cfg = resonant_protocol(1, 0.1);
        cfg.t_grid = Eigen::VectorXd::LinSpaced(2001, 0.0, cfg.t_grid(cfg.t_grid.size() - 1));
        EvolutionTrace trs, trp;
        const double ms_s = best_of_three_ms([&] { trs = run_protocol(cfg, Exec::serial); });
        const double ms_p = best_of_three_ms([&] { trp = run_protocol(cfg, Exec::parallel); });
        double d = 0.0;
        for (std::size_t i = 0; i < trs.rows.size(); ++i) {
            const auto& a = trs.rows[i];
            const auto& b = trp.rows[i];
            for (double v : {a.t - b.t, a.ng_system - b.ng_system, a.ng_ancilla - b.ng_ancilla,
                             a.mutual_info - b.mutual_info, a.fidelity - b.fidelity,
                             a.balance_residual - b.balance_residual,
                             a.total_excitation - b.total_excitation})
                d = std::max(d, std::abs(v));
        }
        report("transfer trace (2001 pts)", ms_s, ms_p, d);
    }

    return 0;
}
