#include "fockmetric/dynamics.hpp"

#include <cmath>

#include "fockmetric/detail/parallel_for.hpp"
#include "fockmetric/gaussian.hpp"

namespace fockmetric {

namespace {

constexpr double kLeakTol = 1e-8;
constexpr double kSwapFidelity = 1.0 - 1e-9;

void validate_config(const ProtocolConfig& cfg) {
    if (!(cfg.omega_s > 0.0) || !(cfg.omega_a > 0.0))
        throw std::invalid_argument("ProtocolConfig: frequencies must be positive");
    if (cfg.gamma < 0.0) throw std::invalid_argument("ProtocolConfig: negative coupling");
    if (cfg.m < 0 || cfg.m > 5)
        throw std::invalid_argument("ProtocolConfig: ancilla level outside 0..5");
    if (cfg.dim <= cfg.m + 1)
        throw std::invalid_argument("ProtocolConfig: truncation must exceed m + 1");
    if (cfg.t_grid.size() < 1 || cfg.t_grid(0) != 0.0)
        throw std::invalid_argument("ProtocolConfig: time grid must start at 0");
    for (Eigen::Index i = 1; i < cfg.t_grid.size(); ++i)
        if (!(cfg.t_grid(i) > cfg.t_grid(i - 1)))
            throw std::invalid_argument("ProtocolConfig: time grid must be strictly increasing");
}

struct HamiltonianEigen {
    Eigen::MatrixXcd vectors;
    Eigen::VectorXd values;
};

HamiltonianEigen decompose(const Eigen::MatrixXcd& h) {
    const double herm_dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > 1e-12)
        throw ContractViolation("evolve: Hamiltonian Hermiticity deviation " +
                                std::to_string(herm_dev));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    return {es.eigenvectors(), es.eigenvalues()};
}

Eigen::VectorXcd evolve_ket(const HamiltonianEigen& eig, const Eigen::VectorXcd& modal0,
                            double t) {
    const Complex minus_i(0.0, -1.0);
    Eigen::VectorXcd phased(modal0.size());
    for (Eigen::Index k = 0; k < modal0.size(); ++k)
        phased(k) = std::exp(minus_i * eig.values(k) * t) * modal0(k);
    return eig.vectors * phased;
}

}  // namespace

ProtocolConfig resonant_protocol(int m, double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("resonant_protocol: coupling must be positive");
    ProtocolConfig cfg;
    cfg.omega_s = 1.0;
    cfg.omega_a = 1.0;
    cfg.gamma = gamma;
    cfg.m = m;
    cfg.dim = m + 4;
    cfg.t_grid = Eigen::VectorXd::LinSpaced(201, 0.0, M_PI / (2.0 * gamma));
    validate_config(cfg);
    return cfg;
}

OperatorMatrix build_hamiltonian(const ProtocolConfig& cfg) {
    validate_config(cfg);
    const int d = cfg.dim;
    const Eigen::MatrixXcd a = annihilation_matrix(d).mat;
    const Eigen::MatrixXcd num = number_matrix(d).mat;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    Eigen::MatrixXcd h = cfg.omega_s * kron(num, id) + cfg.omega_a * kron(id, num) +
                         cfg.gamma * (kron(a.adjoint(), a) + kron(a, a.adjoint()));
    return {std::move(h), OperatorKind::hamiltonian};
}

DensityMatrix evolve(const DensityMatrix& rho0, const OperatorMatrix& h, double t) {
    if (h.mat.rows() != rho0.dim()) throw std::invalid_argument("evolve: dimension mismatch");
    const HamiltonianEigen eig = decompose(h.mat);
    const Complex minus_i(0.0, -1.0);
    Eigen::VectorXcd phases(eig.values.size());
    for (Eigen::Index k = 0; k < eig.values.size(); ++k)
        phases(k) = std::exp(minus_i * eig.values(k) * t);
    const Eigen::MatrixXcd u = eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
    return DensityMatrix(u * rho0.mat * u.adjoint(), rho0.mode_dims, rho0.omega_per_mode);
}

EvolutionTrace run_protocol(const ProtocolConfig& cfg, Exec exec) {
    validate_config(cfg);
    const int d = cfg.dim;
    const OperatorMatrix h = build_hamiltonian(cfg);
    const HamiltonianEigen eig = decompose(h.mat);

    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(d * d);
    psi0(cfg.m) = 1.0;  // |0>_S (x) |m>_A
    const Eigen::VectorXcd modal0 = eig.vectors.adjoint() * psi0;

    const Eigen::MatrixXcd num = number_matrix(d).mat;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    const OperatorMatrix n_total{kron(num, id) + kron(id, num), OperatorKind::generic};
    const DensityMatrix target = to_density(fock_ket(cfg.m, cfg.omega_s, d));

    EvolutionTrace trace;
    trace.rows.resize(cfg.t_grid.size());
    detail::for_each_index(static_cast<int>(cfg.t_grid.size()), exec, [&](int i) {
        const double t = cfg.t_grid(i);
        const Eigen::VectorXcd psi = evolve_ket(eig, modal0, t);

        double leak_s = 0.0, leak_a = 0.0;
        for (int k = 0; k < d; ++k) {
            leak_s += std::norm(psi((d - 1) * d + k));
            leak_a += std::norm(psi(k * d + (d - 1)));
        }
        if (leak_s > kLeakTol || leak_a > kLeakTol)
            throw NumericError("run_protocol: truncation leakage " +
                               std::to_string(std::max(leak_s, leak_a)) + " at t = " +
                               std::to_string(t));

        const DensityMatrix rho(psi * psi.adjoint(), {d, d}, {cfg.omega_s, cfg.omega_a});
        const DensityMatrix rho_s = partial_trace(rho, 0);

        EvolutionRow row;
        row.t = t;
        row.ng_system = ng_degree(rho, 0);
        row.ng_ancilla = ng_degree(rho, 1);
        row.mutual_info = mutual_information(rho);
        row.fidelity = fidelity(rho_s, target);
        row.balance_residual = information_balance_residual(rho);
        row.total_excitation = std::real(expectation(n_total, rho));
        trace.rows[i] = row;
    });
    return trace;
}

double mutual_information(const DensityMatrix& rho) {
    if (rho.modes() != 2)
        throw std::invalid_argument("mutual_information: need a two-mode state");
    return von_neumann_entropy(partial_trace(rho, 0)) +
           von_neumann_entropy(partial_trace(rho, 1)) - von_neumann_entropy(rho);
}

double information_balance_residual(const DensityMatrix& rho) {
    if (rho.modes() != 2)
        throw std::invalid_argument("information_balance_residual: need a two-mode state");
    const DensityMatrix rho_s = partial_trace(rho, 0);
    const DensityMatrix rho_a = partial_trace(rho, 1);

    const double s_s = von_neumann_entropy(rho_s);
    const double s_a = von_neumann_entropy(rho_a);
    const double s_joint = von_neumann_entropy(rho);

    const double g_s = reference_gaussian_entropy(moments_of_state(rho, 0));
    const double g_a = reference_gaussian_entropy(moments_of_state(rho, 1));
    const double g_joint = reference_gaussian_entropy(moments_of_state(rho));

    const double mutual = s_s + s_a - s_joint;
    const double mutual_gauss = g_s + g_a - g_joint;
    const double entropy_gap = g_joint - s_joint;
    const double ng_s = ng_degree(rho, 0);
    const double ng_a = ng_degree(rho, 1);

    return std::abs((mutual - mutual_gauss) - (entropy_gap - ng_s - ng_a));
}

SwapTime find_swap_time(const ProtocolConfig& cfg) {
    validate_config(cfg);
    const int d = cfg.dim;
    const OperatorMatrix h = build_hamiltonian(cfg);
    const HamiltonianEigen eig = decompose(h.mat);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(d * d);
    psi0(cfg.m) = 1.0;
    const Eigen::VectorXcd modal0 = eig.vectors.adjoint() * psi0;
    const DensityMatrix target = to_density(fock_ket(cfg.m, cfg.omega_s, d));

    auto fid_at = [&](double t) {
        const Eigen::VectorXcd psi = evolve_ket(eig, modal0, t);
        const DensityMatrix rho(psi * psi.adjoint(), {d, d}, {cfg.omega_s, cfg.omega_a});
        return fidelity(partial_trace(rho, 0), target);
    };

    const Eigen::Index last = cfg.t_grid.size() - 1;
    Eigen::Index pick = -1;
    for (Eigen::Index i = 0; i <= last; ++i)
        if (fid_at(cfg.t_grid(i)) >= kSwapFidelity) {
            pick = i;
            break;
        }
    bool candidate_reached = pick >= 0;
    if (!candidate_reached) {
        double best = -1.0;
        for (Eigen::Index i = 0; i <= last; ++i) {
            const double f = fid_at(cfg.t_grid(i));
            if (f > best) {
                best = f;
                pick = i;
            }
        }
    }

    // Golden-section maximization between the neighboring grid points.
    double a = cfg.t_grid(std::max<Eigen::Index>(pick - 1, 0));
    double b = cfg.t_grid(std::min<Eigen::Index>(pick + 1, last));
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = fid_at(x1);
    double f2 = fid_at(x2);
    while (b - a > 1e-10 * std::max(1.0, b)) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = fid_at(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = fid_at(x1);
        }
    }
    const double t_star = 0.5 * (a + b);
    const double f_star = fid_at(t_star);
    return {t_star, f_star, f_star >= kSwapFidelity};
}

}  // namespace fockmetric
