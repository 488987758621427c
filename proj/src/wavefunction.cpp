#include "fockmetric/wavefunction.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "fockmetric/detail/parallel_for.hpp"

namespace fockmetric {

namespace {

// Two levels beyond the public cap: dpsi_domega of level 40 reaches psi_42.
constexpr int kMaxLevelInternal = 42;
constexpr int kMaxLevelPublic = 40;

struct UnitRule {
    Eigen::VectorXd y;     // nodes of the weight e^{-y^2}
    Eigen::VectorXd logw;  // ln of the modified weights w_i e^{y_i^2}
};

// Orthonormal Hermite polynomials p_k (weight e^{-y^2}) run upward to p_N at
// fixed y, rescaled along the way so nothing overflows on large grids.
// Returns the Newton step p_N / p_N' (the nodes are the roots of p_N, and
// p_N' = sqrt(2N) p_{N-1}) together with ln|p_{N-1}|, which fixes the weight.
struct NodeEval {
    double newton_delta;
    double log_p_last;
};

NodeEval eval_orthonormal_hermite(int n_points, double y) {
    double prev = 0.0;
    double cur = std::pow(M_PI, -0.25);
    double log_scale = 0.0;
    for (int k = 0; k < n_points; ++k) {
        const double next = y * std::sqrt(2.0 / (k + 1)) * cur -
                            std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > 1e150 || std::abs(prev) > 1e150) {
            cur *= 1e-150;
            prev *= 1e-150;
            log_scale += std::log(1e150);
        }
    }
    return {cur / (std::sqrt(2.0 * n_points) * prev),
            std::log(std::abs(prev)) + log_scale};
}

// Gauss-Hermite rule: Golub-Welsch eigenvalues seed the nodes, then Newton on
// p_N polishes them and the weight comes from w_i e^{y_i^2} = 1/(N p_{N-1}^2
// e^{-y_i^2}). The textbook route -- sqrt(pi) times the squared first
// eigenvector component -- is useless here: at edge nodes that component
// sits far below the eigensolver's absolute error, and the e^{+y^2}
// modification blows the noise up into weights that are wrong by orders of
// magnitude. The recurrence evaluation keeps every weight at full relative
// accuracy.
const UnitRule& unit_gauss_hermite(int points) {
    static std::map<int, UnitRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(points);
    if (it != cache.end()) return it->second;

    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(points, points);
    for (int k = 1; k < points; ++k) {
        const double b = std::sqrt(0.5 * k);
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    UnitRule rule;
    rule.y = es.eigenvalues();
    rule.logw.resize(points);
    const double log_n = std::log(static_cast<double>(points));
    for (int i = 0; i < points; ++i) {
        double y = rule.y(i);
        for (int step = 0; step < 3; ++step)
            y -= eval_orthonormal_hermite(points, y).newton_delta;
        rule.y(i) = y;
        rule.logw(i) = -log_n - 2.0 * eval_orthonormal_hermite(points, y).log_p_last + y * y;
    }
    return cache.emplace(points, std::move(rule)).first->second;
}

}  // namespace

QuadratureGrid gauss_hermite_grid(int points, double omega) {
    if (points < 1) throw std::invalid_argument("gauss_hermite_grid: need at least one node");
    if (!(omega > 0.0)) throw std::invalid_argument("gauss_hermite_grid: omega must be positive");
    const UnitRule& rule = unit_gauss_hermite(points);
    const double scale = 1.0 / std::sqrt(omega);
    QuadratureGrid grid;
    grid.nodes = rule.y * scale;
    grid.weights = (rule.logw.array().exp() * scale).matrix();
    grid.scheme = QuadratureGrid::Scheme::gauss_hermite;
    return grid;
}

QuadratureGrid trapezoid_grid(int points, double half_width) {
    if (points < 2) throw std::invalid_argument("trapezoid_grid: need at least two nodes");
    if (!(half_width > 0.0)) throw std::invalid_argument("trapezoid_grid: bad half width");
    QuadratureGrid grid;
    grid.nodes = Eigen::VectorXd::LinSpaced(points, -half_width, half_width);
    const double h = 2.0 * half_width / (points - 1);
    grid.weights = Eigen::VectorXd::Constant(points, h);
    grid.weights(0) = 0.5 * h;
    grid.weights(points - 1) = 0.5 * h;
    grid.scheme = QuadratureGrid::Scheme::trapezoid;
    return grid;
}

double hermite_physicists(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_physicists: negative degree");
    if (n == 0) return 1.0;
    double hkm1 = 1.0;
    double hk = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double hkp1 = 2.0 * x * hk - 2.0 * k * hkm1;
        hkm1 = hk;
        hk = hkp1;
    }
    return hk;
}

double laguerre(int n, double x) {
    if (n < 0) throw std::invalid_argument("laguerre: negative degree");
    if (n == 0) return 1.0;
    double lkm1 = 1.0;
    double lk = 1.0 - x;
    for (int k = 1; k < n; ++k) {
        const double lkp1 = ((2.0 * k + 1.0 - x) * lk - k * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

double psi(const WaveParams& p, double x) {
    if (!(p.omega > 0.0)) throw std::invalid_argument("psi: omega must be positive");
    if (p.n < 0 || p.n > kMaxLevelInternal)
        throw std::invalid_argument("psi: level outside supported range");
    // (omega/pi)^{1/4} / sqrt(2^n n!) via logs; the Hermite value itself
    // stays within double range for n <= 42 on any grid the envelope allows.
    const double log_norm = 0.25 * std::log(p.omega / M_PI) -
                            0.5 * (p.n * std::log(2.0) + std::lgamma(p.n + 1.0));
    const double y = std::sqrt(p.omega) * x;
    return hermite_physicists(p.n, y) * std::exp(log_norm - 0.5 * y * y);
}

double dpsi_domega(const WaveParams& p, double x) {
    if (!(p.omega > 0.0)) throw std::invalid_argument("dpsi_domega: omega must be positive");
    if (p.n < 0 || p.n > kMaxLevelPublic)
        throw std::invalid_argument("dpsi_domega: level outside supported range");
    const double down =
        (p.n >= 2) ? std::sqrt(static_cast<double>(p.n) * (p.n - 1.0)) *
                         psi({p.n - 2, p.omega}, x)
                   : 0.0;
    const double up = std::sqrt((p.n + 1.0) * (p.n + 2.0)) * psi({p.n + 2, p.omega}, x);
    return (down - up) / (4.0 * p.omega);
}

std::complex<double> overlap(const std::function<std::complex<double>(double)>& f,
                             const std::function<std::complex<double>(double)>& g,
                             const QuadratureGrid& grid) {
    if (grid.nodes.size() == 0) throw std::invalid_argument("overlap: empty grid");
    std::complex<double> acc = 0.0;
    for (Eigen::Index i = 0; i < grid.nodes.size(); ++i)
        acc += grid.weights(i) * std::conj(f(grid.nodes(i))) * g(grid.nodes(i));
    return acc;
}

double overlap_real(const std::function<double(double)>& f,
                    const std::function<double(double)>& g, const QuadratureGrid& grid) {
    if (grid.nodes.size() == 0) throw std::invalid_argument("overlap_real: empty grid");
    double acc = 0.0;
    for (Eigen::Index i = 0; i < grid.nodes.size(); ++i)
        acc += grid.weights(i) * f(grid.nodes(i)) * g(grid.nodes(i));
    return acc;
}

double central_moment(const WaveParams& p, int order) {
    if (order < 1 || order > 4) throw std::invalid_argument("central_moment: order in 1..4");
    const QuadratureGrid grid = gauss_hermite_grid(200, p.omega);
    auto prob = [&](double x) {
        const double v = psi(p, x);
        return v * v;
    };
    double mean = 0.0;
    for (Eigen::Index i = 0; i < grid.nodes.size(); ++i)
        mean += grid.weights(i) * grid.nodes(i) * prob(grid.nodes(i));
    double acc = 0.0;
    for (Eigen::Index i = 0; i < grid.nodes.size(); ++i)
        acc += grid.weights(i) * std::pow(grid.nodes(i) - mean, order) * prob(grid.nodes(i));
    return acc;
}

double wigner_fock(const WaveParams& params, double q, double p) {
    if (!(params.omega > 0.0)) throw std::invalid_argument("wigner_fock: omega must be positive");
    if (params.n < 0 || params.n > kMaxLevelInternal)
        throw std::invalid_argument("wigner_fock: level outside supported range");
    const double u = 0.5 * (params.omega * q * q + p * p / params.omega);
    const double sign = (params.n % 2 == 0) ? 1.0 : -1.0;
    return sign / M_PI * std::exp(-2.0 * u) * laguerre(params.n, 4.0 * u);
}

Eigen::MatrixXd wigner_grid(const WaveParams& params, const Eigen::VectorXd& qs,
                            const Eigen::VectorXd& ps, Exec exec) {
    if (!(params.omega > 0.0)) throw std::invalid_argument("wigner_grid: omega must be positive");
    Eigen::MatrixXd w(qs.size(), ps.size());
    detail::for_each_index(static_cast<int>(qs.size()), exec, [&](int i) {
        for (Eigen::Index j = 0; j < ps.size(); ++j)
            w(i, j) = wigner_fock(params, qs(i), ps(j));
    });
    return w;
}

double wigner_total_mass(const WaveParams& params, int points, Exec exec) {
    // Envelope in q is e^{-omega q^2}, in p it is e^{-p^2/omega}; both nested
    // rules are therefore exact for the polynomial prefactor. The per-row
    // partial sums are combined in row order, so the parallel reduction
    // matches the serial one bitwise.
    const QuadratureGrid gq = gauss_hermite_grid(points, params.omega);
    const QuadratureGrid gp = gauss_hermite_grid(points, 1.0 / params.omega);
    std::vector<double> row_sum(gq.nodes.size(), 0.0);
    detail::for_each_index(static_cast<int>(gq.nodes.size()), exec, [&](int i) {
        double acc = 0.0;
        for (Eigen::Index j = 0; j < gp.nodes.size(); ++j)
            acc += gp.weights(j) * wigner_fock(params, gq.nodes(i), gp.nodes(j));
        row_sum[i] = gq.weights(i) * acc;
    });
    double mass = 0.0;
    for (double v : row_sum) mass += v;
    return mass;
}

double wigner_marginal_q(const WaveParams& params, double q, int points) {
    const QuadratureGrid gp = gauss_hermite_grid(points, 1.0 / params.omega);
    double acc = 0.0;
    for (Eigen::Index j = 0; j < gp.nodes.size(); ++j)
        acc += gp.weights(j) * wigner_fock(params, q, gp.nodes(j));
    return acc;
}

}  // namespace fockmetric
