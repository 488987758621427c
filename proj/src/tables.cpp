#include "fockmetric/tables.hpp"

#include <cmath>
#include <cstdio>

#include "fockmetric/detail/parallel_for.hpp"
#include "fockmetric/gaussian.hpp"
#include "fockmetric/measurement.hpp"
#include "fockmetric/metrology.hpp"

namespace fockmetric {

namespace {

std::string trimmed_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

nlohmann::json grid_params(const OmegaGrid& grid) {
    return {{"omega_start", grid.start},
            {"omega_stop", grid.stop},
            {"omega_count", grid.count},
            {"log", grid.log_spaced}};
}

void require_levels(const std::vector<int>& levels, const char* who) {
    if (levels.empty())
        throw std::invalid_argument(std::string(who) + ": empty level list");
}

}  // namespace

Eigen::VectorXd OmegaGrid::points() const {
    if (!(start > 0.0) || !(stop > start))
        throw std::invalid_argument("OmegaGrid: need 0 < start < stop");
    if (count < 2) throw std::invalid_argument("OmegaGrid: need at least two sweep points");
    if (log_spaced)
        return Eigen::VectorXd::LinSpaced(count, std::log(start), std::log(stop))
            .array()
            .exp()
            .matrix();
    return Eigen::VectorXd::LinSpaced(count, start, stop);
}

Table fig1_table() {
    Table t;
    t.command = "fig1";
    t.params = {{"levels", "0..10"}};
    t.columns = {"n", "delta_ng"};
    for (int n = 0; n <= 10; ++n)
        t.rows.push_back({static_cast<double>(n), ng_degree_fock(n)});
    return t;
}

Table fig2_table(const OmegaGrid& grid, Exec exec) {
    const Eigen::VectorXd omegas = grid.points();
    Table t;
    t.command = "fig2";
    t.params = grid_params(grid);
    t.columns = {"omega", "F_n0", "F_n3", "F_n5", "F_n10", "F_gauss"};
    t.rows.resize(omegas.size());
    detail::for_each_index(static_cast<int>(omegas.size()), exec, [&](int i) {
        const double w = omegas(i);
        t.rows[i] = {w,
                     qfi_fock_closed(0, w).qfi,
                     qfi_fock_closed(3, w).qfi,
                     qfi_fock_closed(5, w).qfi,
                     qfi_fock_closed(10, w).qfi,
                     1.0 / (w * w)};
    });
    return t;
}

Table fig3_table(const OmegaGrid& grid, const std::vector<int>& levels, Exec exec) {
    require_levels(levels, "fig3_table");
    const Eigen::VectorXd omegas = grid.points();
    Table t;
    t.command = "fig3";
    t.params = grid_params(grid);
    t.params["levels"] = levels;
    t.columns = {"omega"};
    for (int lv : levels) t.columns.push_back("R_n" + std::to_string(lv));
    t.rows.resize(omegas.size());
    detail::for_each_index(static_cast<int>(omegas.size()), exec, [&](int i) {
        const double w = omegas(i);
        std::vector<double> row = {w};
        for (int lv : levels) row.push_back(qfi_per_energy(lv, w));
        t.rows[i] = std::move(row);
    });
    return t;
}

Table fig4_table(const std::vector<double>& omegas, const std::vector<int>& levels) {
    require_levels(levels, "fig4_table");
    Table t;
    t.command = "fig4";
    t.params = {{"omegas", omegas}, {"levels", levels}};
    t.columns = {"n", "delta_ng"};
    for (double w : omegas) t.columns.push_back("F_omega_" + trimmed_number(w));
    for (int lv : levels) {
        std::vector<double> row = {static_cast<double>(lv), ng_degree_fock(lv)};
        for (double w : omegas) row.push_back(qfi_fock_closed(lv, w).qfi);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table fig5_table(const ProtocolConfig& cfg, Exec exec) {
    const EvolutionTrace trace = run_protocol(cfg, exec);
    Table t;
    t.command = "fig5";
    t.params = {{"omega_s", cfg.omega_s}, {"omega_a", cfg.omega_a}, {"gamma", cfg.gamma},
                {"m", cfg.m},             {"dim", cfg.dim},         {"t_count", cfg.t_grid.size()}};
    t.columns = {"t", "ng_system", "ng_ancilla", "mutual_info", "fidelity", "balance_residual"};
    for (const EvolutionRow& r : trace.rows)
        t.rows.push_back({r.t, r.ng_system, r.ng_ancilla, r.mutual_info, r.fidelity,
                          r.balance_residual});
    return t;
}

Table fig6_table(const OmegaGrid& grid, int max_n, Exec exec) {
    if (max_n < 1) throw std::invalid_argument("fig6_table: need at least one level set");
    const Eigen::VectorXd omegas = grid.points();
    Table t;
    t.command = "fig6";
    t.params = grid_params(grid);
    t.params["max_n"] = max_n;
    t.columns = {"omega"};
    for (int n = 1; n <= max_n; ++n) {
        t.columns.push_back("F_avg_N" + std::to_string(n));
        t.columns.push_back("F_exact_N" + std::to_string(n));
    }
    std::vector<std::vector<int>> sets;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<int> levels(n);
        for (int k = 0; k < n; ++k) levels[k] = k;
        sets.push_back(std::move(levels));
    }
    t.rows.resize(omegas.size());
    detail::for_each_index(static_cast<int>(omegas.size()), exec, [&](int i) {
        const double w = omegas(i);
        std::vector<double> row = {w};
        for (const auto& levels : sets) {
            row.push_back(qfi_superposition_averaged(levels, w).qfi);
            row.push_back(qfi_superposition_exact(levels, w).qfi);
        }
        t.rows[i] = std::move(row);
    });
    return t;
}

Table qfi_table(const OmegaGrid& grid, const std::vector<int>& levels, Exec exec) {
    require_levels(levels, "qfi_table");
    const Eigen::VectorXd omegas = grid.points();
    Table t;
    t.command = "qfi";
    t.params = grid_params(grid);
    t.params["levels"] = levels;
    t.columns = {"omega"};
    for (int lv : levels) t.columns.push_back("F_n" + std::to_string(lv));
    t.rows.resize(omegas.size());
    detail::for_each_index(static_cast<int>(omegas.size()), exec, [&](int i) {
        const double w = omegas(i);
        std::vector<double> row = {w};
        for (int lv : levels) row.push_back(qfi_fock_closed(lv, w).qfi);
        t.rows[i] = std::move(row);
    });
    return t;
}

Table ng_table(const std::vector<int>& levels) {
    require_levels(levels, "ng_table");
    Table t;
    t.command = "ng";
    t.params = {{"levels", levels}};
    t.columns = {"n", "delta_ng"};
    for (int lv : levels)
        t.rows.push_back({static_cast<double>(lv), ng_degree_fock(lv)});
    return t;
}

Table measure_table(const std::vector<double>& ps, double omega) {
    if (ps.empty()) throw std::invalid_argument("measure_table: empty strength list");
    Table t;
    t.command = "measure";
    t.params = {{"p", ps}, {"omega", omega}};
    t.columns = {"p", "pop0", "pop1", "mean_n", "delta_ng"};
    const int dim = 16;
    const OperatorMatrix num = number_matrix(dim);
    for (double p : ps) {
        const DensityMatrix out =
            apply_channel(to_density(fock_ket(0, omega, dim)), build_channel(p, dim));
        t.rows.push_back({p, std::real(out.mat(0, 0)), std::real(out.mat(1, 1)),
                          std::real(expectation(num, out)), ng_degree(out, 0)});
    }
    return t;
}

}  // namespace fockmetric
