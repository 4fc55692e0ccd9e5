#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "chiralix/numerics.hpp"
#include "oracles.hpp"

using namespace chiralix;

TEST_CASE("bessel values against the standard library") {
    // Looser tolerance at large argument where the reference itself drifts.
    const std::pair<double, double> cases[] = {{0.1, 1e-13}, {1.0, 1e-13}, {3.7, 1e-13},
                                               {12.0, 1e-13}, {55.5, 1e-12}, {200.0, 1e-11},
                                               {799.0, 1e-11}};
    for (auto [x, tol] : cases) {
        auto j = num::bessel_j_array(60, x);
        for (int k = 0; k <= 60; k += 3) {
            double ref = std::cyl_bessel_j(static_cast<double>(k), x);
            CHECK(std::abs(j[static_cast<std::size_t>(k)] - ref) < tol);
        }
    }
}

TEST_CASE("bessel high order tail") {
    auto j = num::bessel_j_array(500, 10.0);
    CHECK(std::abs(j[100]) < 1e-80);       // deep in the superexponential tail
    CHECK(j[500] >= 0.0);
    CHECK(std::abs(j[20] - std::cyl_bessel_j(20.0, 10.0)) < 1e-13);
}

TEST_CASE("bessel squared-sum identity") {
    // needs orders well past x, so keep x comfortably under the order cap
    for (double x : {0.5, 7.0, 100.0, 300.0}) {
        auto j = num::bessel_j_array(num::kMaxBesselOrder, x);
        double acc = j[0] * j[0];
        for (std::size_t k = 1; k < j.size(); ++k) acc += 2.0 * j[k] * j[k];
        CHECK(std::abs(acc - 1.0) < 1e-12);
    }
}

TEST_CASE("bessel recurrence residual") {
    for (double x : {0.25, 2.0, 30.0, 400.0}) {
        auto j = num::bessel_j_array(80, x);
        for (int k = 1; k < 80; ++k) {
            double resid = j[static_cast<std::size_t>(k - 1)] + j[static_cast<std::size_t>(k + 1)] -
                           (2.0 * k / x) * j[static_cast<std::size_t>(k)];
            CHECK(std::abs(resid) < 1e-11);
        }
    }
}

TEST_CASE("bessel small arguments and edge cases") {
    auto j0 = num::bessel_j_array(4, 0.0);
    CHECK(j0[0] == 1.0);
    CHECK(j0[1] == 0.0);
    auto js = num::bessel_j_array(6, 1e-8);
    CHECK(std::abs(js[0] - 1.0) < 1e-15);
    CHECK(std::abs(js[1] - 5e-9) < 1e-20);
    CHECK(js[5] == 0.0);
    CHECK(std::abs(num::bessel_j(-3, 2.5) + num::bessel_j(3, 2.5)) < 1e-15);
    CHECK(std::abs(num::bessel_j(-4, 2.5) - num::bessel_j(4, 2.5)) < 1e-15);
}

TEST_CASE("bessel domain rejection") {
    CHECK_THROWS_AS(num::bessel_j_array(-1, 1.0), std::domain_error);
    CHECK_THROWS_AS(num::bessel_j_array(501, 1.0), std::domain_error);
    CHECK_THROWS_AS(num::bessel_j_array(10, -0.5), std::domain_error);
    CHECK_THROWS_AS(num::bessel_j_array(10, 800.5), std::domain_error);
    CHECK_THROWS_AS(num::bessel_j(501, 1.0), std::domain_error);
}

TEST_CASE("determinant against cofactor expansion") {
    for (unsigned seed : {1u, 2u, 3u, 4u}) {
        for (int n : {1, 2, 3, 4, 5, 6}) {
            Eigen::MatrixXcd m = oracles::random_complex_matrix(n, seed * 100 + n);
            Complex ref = oracles::cofactor_det(m);
            Complex got = num::det_complex(m);
            CHECK(std::abs(got - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST_CASE("determinant basics") {
    Eigen::MatrixXcd m(2, 2);
    m << Complex(1, 1), Complex(2, 0), Complex(0, -1), Complex(1, 3);
    // (1+i)(1+3i) - 2(-i) = -2 + 4i + 2i = -2 + 6i
    CHECK(std::abs(num::det_complex(m) - Complex(-2.0, 6.0)) < 1e-14);
    CHECK(num::det_complex(Eigen::MatrixXcd::Identity(5, 5)) == Complex(1.0, 0.0));
    CHECK(std::abs(num::det_complex(Eigen::MatrixXcd(0, 0)) - Complex(1.0, 0.0)) == 0.0);

    Eigen::MatrixXcd rect(2, 3);
    CHECK_THROWS_AS(num::det_complex(rect), std::invalid_argument);
}

TEST_CASE("log determinant matches direct determinant") {
    for (int n : {2, 4, 7}) {
        Eigen::MatrixXcd m = oracles::random_complex_matrix(n, 55u + static_cast<unsigned>(n));
        Complex ref = num::det_complex(m);
        num::LogDeterminant ld = num::logdet_complex(m);
        CHECK(std::abs(ld.value() - ref) < 1e-12 * std::abs(ref));
        CHECK(std::abs(std::exp(ld.log_magnitude) - std::abs(ref)) < 1e-12 * std::abs(ref));
        CHECK(ld.phase <= std::numbers::pi);
        CHECK(ld.phase > -std::numbers::pi);
    }
}

TEST_CASE("log determinant far outside double range") {
    // diag(1e-30, ..., 1e-30): det = 1e-600, representable only in logs
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(20, 20) * Complex(1e-30, 0.0);
    num::LogDeterminant ld = num::logdet_complex(m);
    CHECK(std::abs(ld.log10_magnitude() + 600.0) < 1e-9);
    CHECK_FALSE(ld.is_zero());
}

TEST_CASE("singular matrices") {
    Eigen::MatrixXcd m = oracles::random_complex_matrix(4, 99u);
    m.col(2).setZero();  // exactly rank deficient
    CHECK(num::det_complex(m) == Complex(0.0, 0.0));
    CHECK(num::logdet_complex(m).is_zero());
    CHECK(num::logdet_complex(m).value() == Complex(0.0, 0.0));

    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(1, 1);
    CHECK(num::det_complex(z) == Complex(0.0, 0.0));
}

TEST_CASE("line fit recovers exact lines") {
    std::vector<double> x = {1.0, 2.0, 3.0, 4.0, 5.0};
    std::vector<double> y;
    for (double v : x) y.push_back(-2.5 * v + 0.75);
    num::LineFit fit = num::fit_line(x, y);
    CHECK(std::abs(fit.slope + 2.5) < 1e-14);
    CHECK(std::abs(fit.intercept - 0.75) < 1e-13);
    CHECK(fit.rms_residual < 1e-14);

    std::vector<double> flat = {1.0, 1.0, 1.0};
    std::vector<double> any = {0.0, 1.0, 2.0};
    CHECK_THROWS_AS(num::fit_line(flat, any), std::invalid_argument);
    CHECK_THROWS_AS(num::fit_line(std::vector<double>{1.0}, std::vector<double>{2.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(num::fit_line(x, flat), std::invalid_argument);
}

TEST_CASE("pi-scaled trig is exact at quarter turns") {
    CHECK(num::cos_pi(0.0) == 1.0);
    CHECK(num::cos_pi(0.5) == 0.0);
    CHECK(num::cos_pi(1.0) == -1.0);
    CHECK(num::cos_pi(1.5) == 0.0);
    CHECK(num::cos_pi(-0.5) == 0.0);
    CHECK(num::cos_pi(101.5) == 0.0);
    CHECK(num::sin_pi(0.0) == 0.0);
    CHECK(num::sin_pi(0.5) == 1.0);
    CHECK(num::sin_pi(1.0) == 0.0);
    CHECK(num::sin_pi(-1.5) == 1.0);
    CHECK(num::sin_pi(7.0) == 0.0);
    for (double x : {0.123, 0.77, 2.9, -4.3}) {
        CHECK(std::abs(num::cos_pi(x) - std::cos(std::numbers::pi * x)) < 1e-15);
        CHECK(std::abs(num::sin_pi(x) - std::sin(std::numbers::pi * x)) < 1e-15);
    }
}
