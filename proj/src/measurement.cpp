#include "fockmetric/measurement.hpp"

#include <cmath>

#include "fockmetric/gaussian.hpp"
#include "fockmetric/metrology.hpp"

namespace fockmetric {

KrausChannel build_channel(double p, int dim) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("build_channel: strength outside [0,1]");
    if (dim < 2) throw std::invalid_argument("build_channel: need at least two levels");

    Eigen::MatrixXcd m1 = std::sqrt(1.0 - p) * Eigen::MatrixXcd::Identity(dim, dim);
    // Shift-up on the truncated ladder; the top level is annihilated instead
    // of wrapping, so completeness holds on levels 0..dim-2 only.
    Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) shift(n + 1, n) = 1.0;
    Eigen::MatrixXcd m2 = std::sqrt(p) * shift;

    Eigen::MatrixXcd closure = m1.adjoint() * m1 + m2.adjoint() * m2 -
                               Eigen::MatrixXcd::Identity(dim, dim);
    const double residual = closure.topLeftCorner(dim - 1, dim - 1).cwiseAbs().maxCoeff();

    KrausChannel ch;
    ch.operators.push_back({std::move(m1), OperatorKind::kraus});
    ch.operators.push_back({std::move(m2), OperatorKind::kraus});
    ch.p = p;
    ch.completeness_residual = residual;
    return ch;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch) {
    if (rho.modes() != 1)
        throw std::invalid_argument("apply_channel: single-mode channel");
    const int d = rho.dim();
    if (ch.operators.empty() || ch.operators[0].mat.rows() != d)
        throw std::invalid_argument("apply_channel: dimension mismatch");
    const double top_pop = std::real(rho.mat(d - 1, d - 1));
    if (top_pop > 1e-10)
        throw NumericError("apply_channel: top-level population " + std::to_string(top_pop) +
                           " would leak past the truncation");
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (const OperatorMatrix& m : ch.operators) out += m.mat * rho.mat * m.mat.adjoint();
    // The guarded leakage p * top_pop <= 1e-10 is folded back so the output
    // satisfies the unit-trace contract exactly.
    out /= std::real(out.trace());
    return DensityMatrix(std::move(out), rho.mode_dims, rho.omega_per_mode);
}

PreparedProbe prepared_probe_qfi(double p, double omega, int dim) {
    if (!(omega > 0.0)) throw std::invalid_argument("prepared_probe_qfi: omega must be positive");
    const KrausChannel ch = build_channel(p, dim);
    DensityMatrix out = apply_channel(to_density(fock_ket(0, omega, dim)), ch);
    // diag(1-p, p) is pure only at the endpoints: the untouched vacuum or a
    // deterministic |1>. Both are Fock states with a closed-form QFI; in
    // between the state is mixed and mixed-state QFI is out of scope.
    const double purity = std::real((out.mat * out.mat).trace());
    const bool pure = std::abs(purity - 1.0) < 1e-12;
    std::optional<double> qfi;
    if (pure) qfi = qfi_fock_closed(p > 0.5 ? 1 : 0, omega).qfi;
    const double ng = ng_degree(out, 0);
    return {p, omega, pure, qfi, ng, std::move(out)};
}

}  // namespace fockmetric
