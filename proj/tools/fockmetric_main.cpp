#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fockmetric/errors.hpp"
#include "fockmetric/table_io.hpp"
#include "fockmetric/tables.hpp"

namespace {

// Exit codes: 0 success, 1 bad arguments, 2 I/O failure, 3 broken numerical
// contract.
constexpr int kOkExit = 0;
constexpr int kUsageExit = 1;
constexpr int kIoExit = 2;
constexpr int kNumericExit = 3;

}  // namespace

int main(int argc, char** argv) {
    using namespace fockmetric;

    CLI::App app{"fockmetric: frequency-estimation datasets for Fock-state probes"};
    app.require_subcommand(1);

    OmegaGrid grid;
    std::vector<int> levels;
    double gamma = 0.1;
    int m = 1;
    double p = -1.0;  // sentinel: sweep 0..1 when not given
    std::string out_path;
    std::string format = "csv";

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "output file (stdout when omitted)");
        sub->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_sweep = [&](CLI::App* sub) {
        sub->add_option("--omega-start", grid.start, "sweep start frequency");
        sub->add_option("--omega-stop", grid.stop, "sweep stop frequency");
        sub->add_option("--omega-count", grid.count, "sweep point count");
        sub->add_flag("--log,!--linear", grid.log_spaced,
                      "log-spaced sweep (default; --linear for uniform)");
    };
    auto add_levels = [&](CLI::App* sub, const char* help) {
        sub->add_option("--levels", levels, help)->delimiter(',');
    };
    auto add_protocol = [&](CLI::App* sub) {
        sub->add_option("--gamma", gamma, "exchange coupling")->check(CLI::PositiveNumber);
        sub->add_option("--m", m, "ancilla Fock level")->check(CLI::Range(0, 5));
    };

    CLI::App* fig1 = app.add_subcommand("fig1", "nG-degree of |n> for n = 0..10");
    add_output(fig1);

    CLI::App* fig2 = app.add_subcommand(
        "fig2", "QFI of Fock probes and the Gaussian envelope across the sweep");
    add_sweep(fig2);
    add_output(fig2);

    CLI::App* fig3 = app.add_subcommand("fig3", "QFI per unit probe energy across the sweep");
    add_sweep(fig3);
    add_levels(fig3, "Fock levels (default 3,5,10)");
    add_output(fig3);

    CLI::App* fig4 =
        app.add_subcommand("fig4", "(nG-degree, QFI) pairs per level at fixed frequencies");
    add_levels(fig4, "Fock levels (default 1,3,5,7,10)");
    add_output(fig4);

    CLI::App* fig5 = app.add_subcommand("fig5", "resonant transfer-protocol trace");
    add_protocol(fig5);
    add_output(fig5);

    CLI::App* fig6 =
        app.add_subcommand("fig6", "averaged vs exact superposition QFI across the sweep");
    add_sweep(fig6);
    add_output(fig6);

    CLI::App* qfi = app.add_subcommand("qfi", "closed-form QFI for chosen levels");
    add_sweep(qfi);
    add_levels(qfi, "Fock levels (default 0,3,5,10)");
    add_output(qfi);

    CLI::App* ng = app.add_subcommand("ng", "closed-form nG-degree for chosen levels");
    add_levels(ng, "Fock levels (default 0..10)");
    add_output(ng);

    CLI::App* protocol = app.add_subcommand("protocol", "transfer-protocol trace");
    add_protocol(protocol);
    add_output(protocol);

    CLI::App* measure =
        app.add_subcommand("measure", "measurement channel on the vacuum across strengths");
    measure->add_option("--p", p, "single strength in [0,1] (default: 101-point sweep)")
        ->check(CLI::Range(0.0, 1.0));
    add_output(measure);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOkExit : kUsageExit;
    }

    try {
        Table table;
        if (*fig1) {
            table = fig1_table();
        } else if (*fig2) {
            table = fig2_table(grid);
        } else if (*fig3) {
            table = fig3_table(grid, levels.empty() ? std::vector<int>{3, 5, 10} : levels);
        } else if (*fig4) {
            table = fig4_table({0.05, 0.1, 0.5},
                               levels.empty() ? std::vector<int>{1, 3, 5, 7, 10} : levels);
        } else if (*fig5 || *protocol) {
            table = fig5_table(resonant_protocol(m, gamma));
            if (*protocol) table.command = "protocol";
        } else if (*fig6) {
            table = fig6_table(grid);
        } else if (*qfi) {
            table = qfi_table(grid, levels.empty() ? std::vector<int>{0, 3, 5, 10} : levels);
        } else if (*ng) {
            if (levels.empty())
                for (int n = 0; n <= 10; ++n) levels.push_back(n);
            table = ng_table(levels);
        } else if (*measure) {
            std::vector<double> ps;
            if (p >= 0.0) {
                ps.push_back(p);
            } else {
                for (int i = 0; i <= 100; ++i) ps.push_back(i / 100.0);
            }
            table = measure_table(ps);
        }

        if (out_path.empty()) {
            if (format == "csv")
                write_csv(table, std::cout);
            else
                write_json(table, std::cout);
            if (!std::cout) throw std::ios_base::failure("write to stdout failed");
        } else {
            write_table_file(table, out_path, format);
        }
        return kOkExit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageExit;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kIoExit;
    } catch (const ContractViolation& e) {
        std::cerr << "contract violation: " << e.what() << '\n';
        return kNumericExit;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kNumericExit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumericExit;
    }
}
