#include "fockmetric/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "fockmetric/wavefunction.hpp"

namespace fockmetric {

namespace {

void require_omega(double omega, const char* who) {
    if (!(omega > 0.0)) throw std::invalid_argument(std::string(who) + ": omega must be positive");
}

std::string level_list(const std::vector<int>& levels) {
    std::ostringstream os;
    for (size_t i = 0; i < levels.size(); ++i) os << (i ? "," : "") << levels[i];
    return os.str();
}

void validate_levels(const std::vector<int>& levels, int max_level, const char* who) {
    if (levels.empty()) throw std::invalid_argument(std::string(who) + ": empty level set");
    std::set<int> seen;
    for (int lv : levels) {
        if (lv < 0 || lv > max_level)
            throw std::invalid_argument(std::string(who) + ": level outside supported range");
        if (!seen.insert(lv).second)
            throw std::invalid_argument(std::string(who) + ": duplicate level");
    }
}

double fock_qfi_value(int n, double omega) {
    const double dn = n;
    return (dn * dn + dn + 1.0) / (2.0 * omega * omega);
}

}  // namespace

QfiReport qfi_fock_closed(int n, double omega) {
    require_omega(omega, "qfi_fock_closed");
    if (n < 0) throw std::invalid_argument("qfi_fock_closed: negative level");
    return {omega, "fock:" + std::to_string(n), fock_qfi_value(n, omega),
            QfiMethod::closed_form, std::nullopt};
}

QfiReport qfi_pure_numeric(int n, double omega, int points) {
    require_omega(omega, "qfi_pure_numeric");
    if (n < 0 || n > 40) throw std::invalid_argument("qfi_pure_numeric: level outside 0..40");
    // The integrands are polynomial * e^{-omega x^2} of degree 2(n+2); the
    // rule must resolve that exactly.
    if (points < n + 3)
        throw std::invalid_argument("qfi_pure_numeric: too few quadrature points for the level");
    const QuadratureGrid grid = gauss_hermite_grid(points, omega);
    const WaveParams wp{n, omega};
    auto wave = [&](double x) { return psi(wp, x); };
    auto dwave = [&](double x) { return dpsi_domega(wp, x); };
    const double dd = overlap_real(dwave, dwave, grid);
    const double pd = overlap_real(wave, dwave, grid);
    const double value = 4.0 * (dd - pd * pd);
    if (!std::isfinite(value) || value <= 0.0)
        throw NumericError("qfi_pure_numeric: quadrature produced " + std::to_string(value) +
                           " (<dpsi|dpsi> = " + std::to_string(dd) +
                           ", <psi|dpsi> = " + std::to_string(pd) + ")");
    return {omega, "fock:" + std::to_string(n), value, QfiMethod::derivative_numeric,
            std::nullopt};
}

QfiReport qfi_gaussian_formula(const std::function<Eigen::Matrix2d(double)>& sigma_fn,
                               const std::function<Eigen::Vector2d(double)>& d_fn,
                               double omega) {
    require_omega(omega, "qfi_gaussian_formula");
    const double h = 1e-6 * omega;
    const Eigen::Matrix2d sigma = sigma_fn(omega);
    const double det = sigma.determinant();
    if (!(det > 1e-12)) throw NumericError("qfi_gaussian_formula: singular covariance");
    const Eigen::Matrix2d sigma_inv = sigma.inverse();

    const Eigen::Matrix2d dsigma = (sigma_fn(omega + h) - sigma_fn(omega - h)) / (2.0 * h);
    const Eigen::Vector2d dmean = (d_fn(omega + h) - d_fn(omega - h)) / (2.0 * h);
    const double purity = 1.0 / std::sqrt(det);
    auto purity_at = [&](double w) { return 1.0 / std::sqrt(sigma_fn(w).determinant()); };
    const double dpurity = (purity_at(omega + h) - purity_at(omega - h)) / (2.0 * h);

    const Eigen::Matrix2d ratio = sigma_inv * dsigma;
    double value = 0.5 * (ratio * ratio).trace() / (1.0 + purity * purity);

    const double denom = 1.0 - std::pow(purity, 4);
    if (std::abs(denom) < 1e-12) {
        // A family that stays pure has P identically 1: the term is 0/0 and
        // its true limit is 0. A genuinely varying purity crossing 1 cannot
        // be resolved by this formula.
        if (std::abs(dpurity) * omega > 1e-6)
            throw NumericError("qfi_gaussian_formula: purity term 0/0 with varying purity");
    } else {
        value += 2.0 * dpurity * dpurity / denom;
    }
    value += dmean.dot(sigma_inv * dmean);
    if (!std::isfinite(value))
        throw NumericError("qfi_gaussian_formula: non-finite result");
    return {omega, "gaussian-moments", value, QfiMethod::gaussian_formula, std::nullopt};
}

QfiReport qfi_gaussian_fock(int n, double omega) {
    require_omega(omega, "qfi_gaussian_fock");
    if (n < 0) throw std::invalid_argument("qfi_gaussian_fock: negative level");
    const double s = 2.0 * n + 1.0;
    const double value = s * s / ((s * s + 1.0) * omega * omega);
    return {omega, "gaussian-ref:" + std::to_string(n), value, QfiMethod::closed_form,
            std::nullopt};
}

double cramer_rao(double qfi, long n_meas) {
    if (qfi < 0.0) throw std::invalid_argument("cramer_rao: negative information");
    if (n_meas < 1) throw std::invalid_argument("cramer_rao: need at least one trial");
    // qfi = 0 carries no information; the bound is honestly unbounded.
    return 1.0 / (static_cast<double>(n_meas) * qfi);
}

RelativeAdvantage relative_advantage(int n) {
    if (n < 0) throw std::invalid_argument("relative_advantage: negative level");
    const double dn = n;
    const double ratio = dn * dn + dn + 1.0;
    return {ratio, 10.0 * std::log(ratio)};
}

double qfi_per_energy(int n, double omega) {
    require_omega(omega, "qfi_per_energy");
    if (n < 1)
        throw std::invalid_argument("qfi_per_energy: undefined for the vacuum (zero energy gap)");
    const double dn = n;
    return (dn * dn + dn + 1.0) / (2.0 * dn * omega * omega * omega);
}

QfiReport qfi_superposition_averaged(const std::vector<int>& levels, double omega) {
    require_omega(omega, "qfi_superposition_averaged");
    validate_levels(levels, 40, "qfi_superposition_averaged");
    double acc = 0.0;
    for (int lv : levels) acc += fock_qfi_value(lv, omega);
    return {omega, "superposition:" + level_list(levels), acc / levels.size(),
            QfiMethod::superposition_averaged, std::nullopt};
}

QfiReport qfi_superposition_exact(const std::vector<int>& levels, double omega) {
    require_omega(omega, "qfi_superposition_exact");
    validate_levels(levels, 38, "qfi_superposition_exact");
    const double n_terms = static_cast<double>(levels.size());
    const double w2 = omega * omega;

    // <dpsi_i|dpsi_j> from the ladder expansion
    //   dpsi_n = (1/(4w)) [sqrt(n(n-1)) psi_{n-2} - sqrt((n+1)(n+2)) psi_{n+2}];
    // diagonal terms give (i^2+i+1)/(8 w^2), the only off-diagonal support is
    // |i-j| = 4 where the two expansions share one basis level.
    double deriv = 0.0;
    for (int i : levels)
        for (int j : levels) {
            if (i == j) {
                const double di = i;
                deriv += (di * di + di + 1.0) / (8.0 * w2);
            } else if (j == i + 4) {
                deriv += -std::sqrt((i + 1.0) * (i + 2.0) * (i + 3.0) * (i + 4.0)) / (16.0 * w2);
            } else if (j == i - 4) {
                deriv += -std::sqrt((j + 1.0) * (j + 2.0) * (j + 3.0) * (j + 4.0)) / (16.0 * w2);
            }
        }
    deriv /= n_terms;

    // <psi_i|dpsi_j> is supported on i = j -+ 2 with opposite signs for the
    // two orientations, so the phase term cancels pairwise; keep the explicit
    // sum as the statement of that cancellation.
    double phase = 0.0;
    for (int i : levels)
        for (int j : levels) {
            if (i == j - 2) phase += std::sqrt(j * (j - 1.0)) / (4.0 * omega);
            if (i == j + 2) phase += -std::sqrt((j + 1.0) * (j + 2.0)) / (4.0 * omega);
        }
    phase /= n_terms;

    const double value = 4.0 * (deriv - phase * phase);
    return {omega, "superposition:" + level_list(levels), value,
            QfiMethod::superposition_exact, std::nullopt};
}

}  // namespace fockmetric
