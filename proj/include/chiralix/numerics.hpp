// numerics.hpp - Bessel evaluation, complex determinants, small fitting helpers
#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "chiralix/common.hpp"

namespace chiralix::num {

// Supported domain for the Bessel routines below. Orders and arguments beyond
// this are rejected with std::domain_error.
inline constexpr int kMaxBesselOrder = 500;
inline constexpr double kMaxBesselArgument = 800.0;

// J_0(x) .. J_max_order(x) by downward (Miller) recurrence, normalized with
// J_0 + 2*sum_k J_{2k} = 1. Absolute error stays below 1e-13 on the domain.
std::vector<double> bessel_j_array(int max_order, double x);

// Single order, negative orders via J_{-k} = (-1)^k J_k. Prefer the array
// form when several orders at one argument are needed.
double bessel_j(int order, double x);

// Determinant of a square complex matrix by partially pivoted LU.
Complex det_complex(Eigen::MatrixXcd a);

// Log-domain determinant for values far outside double range.
struct LogDeterminant {
    double log_magnitude;  // ln|det|, -inf when singular
    double phase;          // arg(det) in (-pi, pi], 0 when singular

    bool is_zero() const;
    double log10_magnitude() const;
    Complex value() const;  // exp(log_magnitude)*e^{i*phase}; may over/underflow
};

LogDeterminant logdet_complex(Eigen::MatrixXcd a);

// Ordinary least squares y ~ slope*x + intercept.
struct LineFit {
    double slope;
    double intercept;
    double rms_residual;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

// cos(pi*x) and sin(pi*x), exact at integer and half-integer x.
double cos_pi(double x);
double sin_pi(double x);

}  // namespace chiralix::num
