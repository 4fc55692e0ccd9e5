#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chiralix/numerics.hpp"
#include "chiralix/spectral_series.hpp"

using namespace chiralix;

TEST_CASE("taylor argument validation") {
    CHECK_THROWS_AS(series::taylor_coefficients(16, 4), BudgetError);
    CHECK_THROWS_AS(series::taylor_coefficients(7, 4), std::invalid_argument);
    CHECK_THROWS_AS(series::taylor_coefficients(8, -1), std::invalid_argument);
    CHECK_THROWS_AS(series::taylor_coefficients(8, 41), std::invalid_argument);
    CHECK_THROWS_AS(series::moment_table(2, 4), std::invalid_argument);
}

TEST_CASE("low moments have closed forms") {
    // With the shifted generator: M00 = 1, M01 = 0, M02 = N, M11 = N - 4.
    for (int n : {4, 6, 8}) {
        Eigen::MatrixXd m = series::moment_table(n, 2);
        CHECK(m(0, 0) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(std::abs(m(0, 1)) < 1e-13);
        CHECK(m(0, 2) == doctest::Approx(static_cast<double>(n)).epsilon(1e-13));
        CHECK(m(1, 1) == doctest::Approx(static_cast<double>(n - 4)).epsilon(1e-13));
        CHECK((m - m.transpose()).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("reference rationals") {
    const auto& refs = series::reference_taylor_rationals();
    REQUIRE(refs.size() == 10);
    for (std::size_t i = 0; i < refs.size(); ++i) {
        CHECK(refs[i].order == 2 * static_cast<int>(i));
        CHECK(refs[i].denominator > 0);
    }
    auto dense = series::reference_taylor();
    REQUIRE(dense.size() == 19);
    CHECK(dense[0] == 1.0);
    CHECK(dense[2] == -4.0);
    CHECK(dense[3] == 0.0);
    CHECK(dense[18] == doctest::Approx(-149946368.0 / 4465125.0).epsilon(1e-15));
}

TEST_CASE("short chains reproduce the universal coefficients") {
    // orders up to 2N - 4 are size-independent, so N = 8 covers order 12
    series::TaylorTable table = series::taylor_coefficients(8, 13);
    auto ref = series::reference_taylor();
    for (int n = 0; n <= 12; n += 2) {
        double expected = ref[static_cast<std::size_t>(n)];
        CHECK(std::abs(table.coefficients[static_cast<std::size_t>(n)] - expected) <
              1e-8 * std::abs(expected));
    }
    for (int n = 1; n <= 13; n += 2)
        CHECK(std::abs(table.coefficients[static_cast<std::size_t>(n)]) < 1e-12);
    CHECK(table.max_imag_residue < 1e-12);
    CHECK(table.n_qubits == 8);
    CHECK(table.max_order == 13);
}

TEST_CASE("coefficient pattern stability windows") {
    series::StablePatternReport small = series::stable_pattern_check(6);
    CHECK(small.n_small == 6);
    CHECK(small.n_large == 8);
    CHECK(small.window == 8);
    CHECK(small.stable);
    CHECK(small.max_rel_dev < 1e-8);
    CHECK(small.first_violation == 10);

    series::StablePatternReport mid = series::stable_pattern_check(8);
    CHECK(mid.window == 12);
    CHECK(mid.stable);
    CHECK(mid.first_violation == 14);

    CHECK_THROWS_AS(series::stable_pattern_check(14), BudgetError);
    CHECK_THROWS_AS(series::stable_pattern_check(5), std::invalid_argument);
}

TEST_CASE("long-time asymptotics of the kernel determinant") {
    series::AsymptoticFit fit = series::fit_asymptotics(64, 6.0, 14.0);
    CHECK(fit.rank == 64);
    CHECK(fit.t_lo == 6.0);
    CHECK(fit.t_hi == doctest::Approx(14.0).epsilon(1e-12));
    CHECK(std::abs(fit.rate - 4.0 / std::numbers::pi) < 1e-3);
    CHECK(std::abs(fit.amplitude - 1.2295) < 1e-3);
    CHECK(std::abs(fit.amplitude * fit.amplitude - 1.5117) < 2e-3);
    CHECK(std::abs(fit.phase_rate - 2.0) < 0.05);
    CHECK(fit.rms_residual < 1e-3);

    CHECK_THROWS_AS(series::fit_asymptotics(8, 1.0, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(series::fit_asymptotics(64, 0.5, 10.0), std::invalid_argument);
}

TEST_CASE("decay rate closed form") {
    CHECK(series::decay_rate(0.0) == doctest::Approx(8.0 / std::numbers::pi).epsilon(1e-15));
    CHECK(series::decay_rate(0.5) == 0.0);
    CHECK(series::decay_rate(1.5) == 0.0);
    CHECK(series::decay_rate(1.0) == doctest::Approx(8.0 / std::numbers::pi).epsilon(1e-15));
    CHECK(series::decay_rate(0.25) ==
          doctest::Approx(8.0 / std::numbers::pi * std::cos(std::numbers::pi / 4.0))
              .epsilon(1e-14));
    CHECK(series::decay_rate(-0.25) == series::decay_rate(0.25));
}

TEST_CASE("fitted decay rate tracks the closed form") {
    for (double q : {0.0, 0.125, 0.25, 0.375}) {
        double fitted = series::fit_decay_rate(q);
        CHECK(std::abs(fitted - series::decay_rate(q)) <= 1e-2);
    }
    CHECK(series::fit_decay_rate(0.5) == 0.0);
}
