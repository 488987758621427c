#include <cmath>
#include <limits>

#include <doctest.h>

#include "fockmetric/gaussian.hpp"
#include "fockmetric/metrology.hpp"
#include "oracles.hpp"

using namespace fockmetric;

TEST_CASE("closed-form fock QFI") {
    CHECK(qfi_fock_closed(0, 1.0).qfi == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(qfi_fock_closed(3, 0.1).qfi == doctest::Approx(650.0).epsilon(1e-14));
    CHECK(qfi_fock_closed(5, 0.1).qfi == doctest::Approx(1550.0).epsilon(1e-14));
    CHECK(qfi_fock_closed(10, 1.0).qfi == doctest::Approx(55.5).epsilon(1e-15));
    CHECK(qfi_fock_closed(2, 0.5).method == QfiMethod::closed_form);
    CHECK(qfi_fock_closed(2, 0.5).probe == "fock:2");
    CHECK_THROWS_AS(qfi_fock_closed(0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(qfi_fock_closed(-1, 1.0), std::invalid_argument);
}

TEST_CASE("quadrature QFI reproduces the closed form and the difference oracle") {
    for (double omega : {0.05, 0.1, 0.5, 1.0}) {
        for (int n = 0; n <= 10; ++n) {
            const double closed = qfi_fock_closed(n, omega).qfi;
            const double numeric = qfi_pure_numeric(n, omega).qfi;
            CHECK(std::abs(numeric - closed) / closed < 1e-6);
        }
    }
    // fully independent path: finite differences + trapezoid sums
    for (auto [n, omega] : {std::pair{0, 1.0}, {5, 0.5}, {10, 0.1}}) {
        const double closed = qfi_fock_closed(n, omega).qfi;
        CHECK(std::abs(oracles::qfi_fock_fd(n, omega) - closed) / closed < 1e-4);
    }
    CHECK(qfi_pure_numeric(3, 1.0).method == QfiMethod::derivative_numeric);
    CHECK_THROWS_AS(qfi_pure_numeric(10, 1.0, 8), std::invalid_argument);  // rule too small
    CHECK_THROWS_AS(qfi_pure_numeric(41, 1.0), std::invalid_argument);
}

TEST_CASE("gaussian-family QFI from parametrized moments") {
    // moment-matched Fock family against its closed form
    for (double omega : {0.1, 0.5, 1.0}) {
        for (int n = 0; n <= 10; ++n) {
            auto sigma_fn = [n](double w) {
                return Eigen::Matrix2d(moments_of_fock(n, w).sigma);
            };
            auto d_fn = [](double) { return Eigen::Vector2d::Zero().eval(); };
            const double formula = qfi_gaussian_formula(sigma_fn, d_fn, omega).qfi;
            const double closed = qfi_gaussian_fock(n, omega).qfi;
            CHECK(std::abs(formula - closed) / closed < 1e-8);
        }
    }

    // frequency-independent family carries no information
    auto flat_sigma = [](double) { return Eigen::Matrix2d(2.0 * Eigen::Matrix2d::Identity()); };
    auto flat_d = [](double) { return Eigen::Vector2d::Zero().eval(); };
    CHECK(std::abs(qfi_gaussian_formula(flat_sigma, flat_d, 0.7).qfi) < 1e-12);

    // displacement sensing: sigma = I fixed, d = (w, 0) -> F = 1
    auto unit_sigma = [](double) { return Eigen::Matrix2d(Eigen::Matrix2d::Identity()); };
    auto lin_d = [](double w) { return Eigen::Vector2d(w, 0.0).eval(); };
    CHECK(qfi_gaussian_formula(unit_sigma, lin_d, 0.4).qfi == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("gaussian closed form and the n = 0 coincidence") {
    CHECK(qfi_gaussian_fock(10, 0.1).qfi == doctest::Approx(99.77375565610859).epsilon(1e-13));
    for (double omega : {0.05, 0.1, 0.5, 1.0}) {
        // identical at n = 0 (same expression, same rounding)
        CHECK(qfi_gaussian_fock(0, omega).qfi == qfi_fock_closed(0, omega).qfi);
        // strictly below for n >= 1, approaching the omega^-2 envelope
        for (int n = 1; n <= 10; ++n) {
            CHECK(qfi_gaussian_fock(n, omega).qfi < qfi_fock_closed(n, omega).qfi);
            CHECK(qfi_gaussian_fock(n, omega).qfi < 1.0 / (omega * omega));
        }
    }
    // n = 10: within 0.25% of the envelope
    CHECK(std::abs(qfi_gaussian_fock(10, 0.3).qfi * 0.09 - 1.0) < 0.0025);
}

TEST_CASE("cramer-rao bound") {
    CHECK(cramer_rao(0.5, 1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(cramer_rao(650.0, 100) == doctest::Approx(1.5384615384615384e-05).epsilon(1e-14));
    CHECK(cramer_rao(0.0, 10) == std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(cramer_rao(1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(cramer_rao(-1.0, 5), std::invalid_argument);

    const QfiReport r = qfi_fock_closed(3, 1.0);
    CHECK(!r.crb.has_value());
}

TEST_CASE("advantage over the vacuum probe") {
    CHECK(relative_advantage(0).ratio == doctest::Approx(1.0));
    CHECK(relative_advantage(0).log_scaled == doctest::Approx(0.0));
    CHECK(relative_advantage(3).ratio == doctest::Approx(13.0).epsilon(1e-15));
    CHECK(relative_advantage(3).log_scaled == doctest::Approx(10.0 * std::log(13.0)).epsilon(1e-15));
    // the ratio is the QFI quotient at any fixed omega
    for (double omega : {0.1, 1.0})
        CHECK(relative_advantage(7).ratio ==
              doctest::Approx(qfi_fock_closed(7, omega).qfi / qfi_fock_closed(0, omega).qfi)
                  .epsilon(1e-13));
}

TEST_CASE("QFI per unit energy rises with the level") {
    CHECK(qfi_per_energy(3, 1.0) == doctest::Approx(13.0 / 6.0).epsilon(1e-15));
    CHECK(qfi_per_energy(10, 1.0) == doctest::Approx(5.55).epsilon(1e-15));
    for (double omega : {0.1, 0.5, 1.0})
        for (int n = 2; n <= 10; ++n)
            CHECK(qfi_per_energy(n, omega) > qfi_per_energy(n - 1, omega));
    CHECK_THROWS_AS(qfi_per_energy(0, 1.0), std::invalid_argument);
}

TEST_CASE("superposition QFI: averaged vs exact") {
    const std::vector<int> run5{0, 1, 2, 3, 4};
    CHECK(qfi_superposition_averaged({0}, 1.0).qfi == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(qfi_superposition_averaged({0, 1}, 1.0).qfi == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(qfi_superposition_averaged(run5, 1.0).qfi == doctest::Approx(4.5).epsilon(1e-14));

    // no level pair four apart: the two scores coincide
    for (const auto& levels :
         {std::vector<int>{0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}, {0, 3}, {2, 3, 5}}) {
        const double avg = qfi_superposition_averaged(levels, 0.7).qfi;
        const double exact = qfi_superposition_exact(levels, 0.7).qfi;
        CHECK(std::abs(avg - exact) < 1e-9 * avg);
    }
    CHECK(qfi_superposition_exact({0, 1, 2}, 1.0).qfi ==
          doctest::Approx(11.0 / 6.0).epsilon(1e-14));

    // {0..4} contains the pairs (0,4): cross term pulls the exact value down
    CHECK(qfi_superposition_exact(run5, 1.0).qfi ==
          doctest::Approx(4.010102051443364).epsilon(1e-14));
    const double gap = (qfi_superposition_averaged(run5, 1.0).qfi -
                        qfi_superposition_exact(run5, 1.0).qfi) /
                       qfi_superposition_averaged(run5, 1.0).qfi;
    CHECK(gap == doctest::Approx(0.10886621079036347).epsilon(1e-10));

    // the pair {0,4} alone, against the independent oracle
    for (double omega : {0.1, 1.0}) {
        CHECK(std::abs(qfi_superposition_exact({0, 4}, omega).qfi -
                       oracles::qfi_superposition_fd({0, 4}, omega)) <
              1e-6 * qfi_superposition_exact({0, 4}, omega).qfi);
        CHECK(std::abs(qfi_superposition_exact(run5, omega).qfi -
                       oracles::qfi_superposition_fd(run5, omega)) <
              1e-6 * qfi_superposition_exact(run5, omega).qfi);
    }

    CHECK(qfi_superposition_averaged(run5, 1.0).method == QfiMethod::superposition_averaged);
    CHECK(qfi_superposition_exact(run5, 1.0).method == QfiMethod::superposition_exact);
    CHECK(qfi_superposition_exact(run5, 1.0).probe == "superposition:0,1,2,3,4");

    CHECK_THROWS_AS(qfi_superposition_exact({}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(qfi_superposition_exact({1, 1}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(qfi_superposition_exact({39}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(qfi_superposition_averaged({41}, 1.0), std::invalid_argument);
}

TEST_CASE("frequency scaling F(c w) c^2 = F(w)") {
    const double omega = 0.31;
    for (double c : {2.0, 10.0}) {
        const double cw = c * omega;
        CHECK(std::abs(qfi_fock_closed(7, cw).qfi * c * c - qfi_fock_closed(7, omega).qfi) <=
              1e-12 * qfi_fock_closed(7, omega).qfi);
        CHECK(std::abs(qfi_pure_numeric(7, cw).qfi * c * c - qfi_pure_numeric(7, omega).qfi) <=
              1e-12 * qfi_pure_numeric(7, omega).qfi);
        CHECK(std::abs(qfi_gaussian_fock(7, cw).qfi * c * c - qfi_gaussian_fock(7, omega).qfi) <=
              1e-12 * qfi_gaussian_fock(7, omega).qfi);
        CHECK(std::abs(qfi_superposition_exact({0, 2, 4}, cw).qfi * c * c -
                       qfi_superposition_exact({0, 2, 4}, omega).qfi) <=
              1e-12 * qfi_superposition_exact({0, 2, 4}, omega).qfi);

        // the finite-difference moment formula only scales to its ~1e-8 floor
        auto sigma_fn = [](double w) { return Eigen::Matrix2d(moments_of_fock(3, w).sigma); };
        auto d_fn = [](double) { return Eigen::Vector2d::Zero().eval(); };
        const double f1 = qfi_gaussian_formula(sigma_fn, d_fn, omega).qfi;
        const double f2 = qfi_gaussian_formula(sigma_fn, d_fn, cw).qfi;
        CHECK(std::abs(f2 * c * c - f1) <= 1e-8 * f1);
    }
}
