#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "fockmetric/hilbert.hpp"

using namespace fockmetric;

namespace {

// Random density matrix: random simplex spectrum conjugated by the
// eigenbasis of a random Hermitian matrix.
DensityMatrix random_state(int dim, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::MatrixXcd h(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) h(i, j) = Complex(u(rng), u(rng));
    h = (h + h.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);

    Eigen::VectorXd probs(dim);
    for (int i = 0; i < dim; ++i) probs(i) = std::abs(u(rng)) + 1e-3;
    probs /= probs.sum();

    Eigen::MatrixXcd rho = es.eigenvectors() * probs.asDiagonal() *
                           es.eigenvectors().adjoint();
    return DensityMatrix(rho, {dim}, {1.0});
}

// Uhlmann fidelity computed the long way, (Tr sqrt(sqrt(r1) r2 sqrt(r1)))^2,
// to pin the pure-state fast path against the general formula.
double uhlmann_reference(const DensityMatrix& r1, const DensityMatrix& r2) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es1(r1.mat);
    Eigen::VectorXd ev = es1.eigenvalues().cwiseMax(0.0);
    Eigen::MatrixXcd sqrt1 = es1.eigenvectors() *
                             ev.cwiseSqrt().asDiagonal() *
                             es1.eigenvectors().adjoint();
    Eigen::MatrixXcd inner = sqrt1 * r2.mat * sqrt1;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es2(inner);
    // Rank-deficient inner matrices carry noise eigenvalues ~1e-16 whose
    // square roots would pollute the trace; clip relative to the largest.
    const double clip = 1e-12 * std::max(0.0, es2.eigenvalues().maxCoeff());
    double tr = 0.0;
    for (int i = 0; i < es2.eigenvalues().size(); ++i)
        if (es2.eigenvalues()(i) > clip) tr += std::sqrt(es2.eigenvalues()(i));
    return tr * tr;
}

}  // namespace

TEST_CASE("ladder and number operators on the truncated basis") {
    const auto a2 = annihilation_matrix(2);
    CHECK(a2.kind == OperatorKind::annihilation);
    CHECK(a2.mat(0, 0) == Complex(0.0));
    CHECK(a2.mat(0, 1) == Complex(1.0));
    CHECK(a2.mat(1, 0) == Complex(0.0));
    CHECK(a2.mat(1, 1) == Complex(0.0));

    const auto a3 = annihilation_matrix(3);
    CHECK(std::real(a3.mat(1, 2)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    // a^dag a reproduces the number operator on every level of the truncation
    const auto a = annihilation_matrix(6);
    const Eigen::MatrixXcd n_from_ladder = a.mat.adjoint() * a.mat;
    const auto n_op = number_matrix(6);
    CHECK((n_from_ladder - n_op.mat).cwiseAbs().maxCoeff() < 1e-14);

    CHECK_THROWS_AS(annihilation_matrix(0), std::invalid_argument);
    CHECK_THROWS_AS(number_matrix(-1), std::invalid_argument);
}

TEST_CASE("fock kets are unit basis vectors") {
    const PureKet k = fock_ket(3, 1.0, 8);
    CHECK(k.dim() == 8);
    CHECK(std::abs(k.coeffs(3) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(k.coeffs.norm() - 1.0) < 1e-15);

    const PureKet s = superposition_ket({0, 2}, 0.5, 4);
    CHECK(std::abs(s.coeffs(0) - Complex(1.0 / std::sqrt(2.0))) < 1e-15);
    CHECK(std::abs(s.coeffs(1)) == 0.0);

    CHECK_THROWS_AS(fock_ket(8, 1.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(fock_ket(-1, 1.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(superposition_ket({0, 0}, 1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(superposition_ket({}, 1.0, 4), std::invalid_argument);
}

TEST_CASE("density-matrix constructor enforces the state contract") {
    // not Hermitian
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
    bad(0, 0) = 0.5;
    bad(1, 1) = 0.5;
    bad(0, 1) = Complex(0.3, 0.0);
    bad(1, 0) = Complex(0.1, 0.0);
    CHECK_THROWS_AS(DensityMatrix(bad, {2}, {1.0}), ContractViolation);

    // wrong trace
    Eigen::MatrixXcd off = Eigen::MatrixXcd::Identity(2, 2);
    CHECK_THROWS_AS(DensityMatrix(off, {2}, {1.0}), ContractViolation);

    // negative eigenvalue
    Eigen::MatrixXcd neg = Eigen::MatrixXcd::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix(neg, {2}, {1.0}), ContractViolation);

    // mode bookkeeping must multiply out to the matrix dimension
    Eigen::MatrixXcd ok = Eigen::MatrixXcd::Zero(4, 4);
    ok(0, 0) = 1.0;
    CHECK_THROWS_AS(DensityMatrix(ok, {3}, {1.0}), std::invalid_argument);
    CHECK_NOTHROW(DensityMatrix(ok, {2, 2}, {1.0, 1.0}));
}

TEST_CASE("von Neumann entropy on known spectra") {
    const DensityMatrix pure = to_density(fock_ket(1, 1.0, 4));
    CHECK(von_neumann_entropy(pure) == doctest::Approx(0.0).epsilon(1e-12));

    Eigen::MatrixXcd half = Eigen::MatrixXcd::Zero(2, 2);
    half(0, 0) = 0.5;
    half(1, 1) = 0.5;
    CHECK(von_neumann_entropy(DensityMatrix(half, {2}, {1.0})) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));

    Eigen::MatrixXcd skew = Eigen::MatrixXcd::Zero(2, 2);
    skew(0, 0) = 0.7;
    skew(1, 1) = 0.3;
    // -0.7 ln 0.7 - 0.3 ln 0.3
    CHECK(von_neumann_entropy(DensityMatrix(skew, {2}, {1.0})) ==
          doctest::Approx(0.6108643020548935).epsilon(1e-14));
}

TEST_CASE("entropy is basis independent") {
    for (unsigned seed : {7u, 19u, 23u}) {
        const DensityMatrix rho = random_state(9, seed);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.mat);
        double direct = 0.0;
        for (int i = 0; i < 9; ++i) {
            const double lam = es.eigenvalues()(i);
            if (lam > 1e-14) direct -= lam * std::log(lam);
        }
        CHECK(von_neumann_entropy(rho) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("fidelity: fixed points and the pure fast path") {
    const DensityMatrix one = to_density(fock_ket(1, 1.0, 4));
    const DensityMatrix zero = to_density(fock_ket(0, 1.0, 4));
    CHECK(fidelity(one, one) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fidelity(one, zero) == doctest::Approx(0.0).epsilon(1e-14));

    Eigen::MatrixXcd skew = Eigen::MatrixXcd::Zero(4, 4);
    skew(0, 0) = 0.7;
    skew(1, 1) = 0.3;
    const DensityMatrix mixed(skew, {4}, {1.0});
    // <1|rho|1> for a pure second argument
    CHECK(fidelity(mixed, one) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(fidelity(one, mixed) == doctest::Approx(0.3).epsilon(1e-14));

    // fast path agrees with the full Uhlmann formula
    for (unsigned seed : {3u, 11u}) {
        const DensityMatrix rho = random_state(6, seed);
        const DensityMatrix psi = to_density(superposition_ket({0, 2, 5}, 1.0, 6));
        CHECK(std::abs(fidelity(rho, psi) - uhlmann_reference(rho, psi)) < 1e-10);
    }

    // two mixed states go through the general path; symmetry is the check
    const DensityMatrix r1 = random_state(5, 31);
    const DensityMatrix r2 = random_state(5, 37);
    CHECK(fidelity(r1, r2) == doctest::Approx(fidelity(r2, r1)).epsilon(1e-10));
    CHECK(fidelity(r1, r2) == doctest::Approx(uhlmann_reference(r1, r2)).epsilon(1e-10));
}

TEST_CASE("tensor and partial trace round trip") {
    const DensityMatrix a = to_density(superposition_ket({0, 1}, 1.0, 3));
    const DensityMatrix b = to_density(fock_ket(2, 0.5, 4));
    const DensityMatrix ab = tensor(a, b);
    CHECK(ab.dim() == 12);
    CHECK(ab.modes() == 2);
    CHECK(ab.omega_per_mode[1] == 0.5);

    const DensityMatrix ra = partial_trace(ab, 0);
    const DensityMatrix rb = partial_trace(ab, 1);
    CHECK((ra.mat - a.mat).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((rb.mat - b.mat).cwiseAbs().maxCoeff() < 1e-14);

    CHECK_THROWS_AS(partial_trace(a, 0), std::invalid_argument);  // single mode
    CHECK_THROWS_AS(partial_trace(ab, 2), std::invalid_argument);
}

TEST_CASE("partial trace of an entangled pair is maximally mixed") {
    // (|01> + |10>)/sqrt(2) on a 2x2 truncation
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(4);
    c(1) = 1.0 / std::sqrt(2.0);
    c(2) = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXcd rho = c * c.adjoint();
    const DensityMatrix bell(rho, {2, 2}, {1.0, 1.0});
    const DensityMatrix red = partial_trace(bell, 0);
    CHECK(std::abs(red.mat(0, 0) - Complex(0.5)) < 1e-14);
    CHECK(std::abs(red.mat(1, 1) - Complex(0.5)) < 1e-14);
    CHECK(std::abs(red.mat(0, 1)) < 1e-14);
    CHECK(von_neumann_entropy(red) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("operator expectations") {
    const DensityMatrix n4 = to_density(fock_ket(4, 0.5, 8));
    const auto num = number_matrix(8);
    CHECK(std::real(expectation(num, n4)) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(std::imag(expectation(num, n4)) == doctest::Approx(0.0).epsilon(1e-14));

    // mean energy omega <n + 1/2> at omega = 0.5, n = 4
    const double energy = 0.5 * (std::real(expectation(num, n4)) + 0.5);
    CHECK(energy == doctest::Approx(2.25).epsilon(1e-14));

    const auto a = annihilation_matrix(8);
    CHECK(std::abs(expectation(a, n4)) < 1e-14);  // off-diagonal on a Fock state

    CHECK_THROWS_AS(expectation(number_matrix(4), n4), std::invalid_argument);
}

TEST_CASE("kron block structure") {
    Eigen::MatrixXcd a(2, 2), b(2, 2);
    a << 1.0, 2.0, 3.0, 4.0;
    b << 0.0, 1.0, 1.0, 0.0;
    const Eigen::MatrixXcd k = kron(a, b);
    CHECK(k.rows() == 4);
    CHECK(std::real(k(0, 1)) == doctest::Approx(1.0));   // a00 * b01
    CHECK(std::real(k(2, 1)) == doctest::Approx(3.0));   // a10 * b01
    CHECK(std::real(k(2, 3)) == doctest::Approx(4.0));   // a11 * b01
    CHECK(std::real(k(3, 2)) == doctest::Approx(4.0));   // a11 * b10
    CHECK(std::real(k(0, 0)) == doctest::Approx(0.0));
}
